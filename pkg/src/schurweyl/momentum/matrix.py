"""Dense square matrices over the Gaussian rationals Q(i)."""

from fractions import Fraction

from .._exact import QQi, fraction_str, to_fraction


def _entry(value):
    if isinstance(value, QQi):
        return value
    if isinstance(value, (tuple, list)) and len(value) == 2:
        return QQi(value[0], value[1])
    return QQi(to_fraction(value))


class Matrix:
    """n x n matrix with QQi entries; immutable by convention."""

    __slots__ = ("n", "rows")

    def __init__(self, rows):
        rows = [[_entry(x) for x in r] for r in rows]
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("matrix must be square")
        self.n = n
        self.rows = tuple(tuple(r) for r in rows)

    @classmethod
    def zeros(cls, n):
        return cls([[0] * n for _ in range(n)])

    @classmethod
    def identity(cls, n):
        return cls.diagonal([1] * n)

    @classmethod
    def diagonal(cls, values):
        values = list(values)
        n = len(values)
        return cls([[values[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def elementary(cls, n, i, j, coeff=1):
        """coeff * E_ij (0-based), the matrix unit sending e_j to e_i."""
        rows = [[0] * n for _ in range(n)]
        rows[i][j] = coeff
        return cls(rows)

    @classmethod
    def permutation(cls, p):
        """Matrix of e_j -> e_{p[j]}."""
        n = len(p)
        rows = [[0] * n for _ in range(n)]
        for j, pj in enumerate(p):
            rows[pj][j] = 1
        return cls(rows)

    def __getitem__(self, ij):
        if isinstance(ij, tuple):
            return self.rows[ij[0]][ij[1]]
        return self.rows[ij]

    def _check(self, other):
        if not isinstance(other, Matrix) or other.n != self.n:
            raise ValueError("matrices of different sizes")

    def __add__(self, other):
        self._check(other)
        return Matrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other):
        self._check(other)
        return Matrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __neg__(self):
        return Matrix([[-a for a in r] for r in self.rows])

    def scale(self, c):
        c = _entry(c)
        return Matrix([[c * a for a in r] for r in self.rows])

    def __matmul__(self, other):
        self._check(other)
        cols = list(zip(*other.rows))
        out = []
        for r in self.rows:
            row = []
            for col in cols:
                acc = QQi()
                for a, b in zip(r, col):
                    if a and b:
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return Matrix(out)

    def adjoint(self):
        return Matrix([[self.rows[j][i].conjugate() for j in range(self.n)] for i in range(self.n)])

    def trace(self):
        acc = QQi()
        for i in range(self.n):
            acc = acc + self.rows[i][i]
        return acc

    def diagonal_entries(self):
        return [self.rows[i][i] for i in range(self.n)]

    def is_diagonal(self):
        return all(not self.rows[i][j] for i in range(self.n) for j in range(self.n) if i != j)

    def is_hermitian(self):
        return self == self.adjoint()

    def is_skew_hermitian(self):
        return self == -self.adjoint()

    def is_real(self):
        return all(a.im == 0 for r in self.rows for a in r)

    def hs_norm_sq(self):
        """Squared Hilbert-Schmidt norm Tr(X* X)."""
        return sum((a.abs2() for r in self.rows for a in r), Fraction(0))

    def commutes_with(self, other):
        return self @ other == other @ self

    def conjugate_by(self, u):
        """u X u*."""
        return u @ self @ u.adjoint()

    def inverse(self):
        """Gauss-Jordan inverse over Q(i)."""
        n = self.n
        aug = [list(r) + [QQi(1 if i == j else 0) for j in range(n)]
               for i, r in enumerate(self.rows)]
        for c in range(n):
            piv = next((r for r in range(c, n) if aug[r][c]), None)
            if piv is None:
                raise ZeroDivisionError("matrix is singular")
            aug[c], aug[piv] = aug[piv], aug[c]
            inv = QQi(1) / aug[c][c]
            aug[c] = [inv * x for x in aug[c]]
            for r in range(n):
                if r != c and aug[r][c]:
                    f = aug[r][c]
                    aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
        return Matrix([r[n:] for r in aug])

    def __eq__(self, other):
        if isinstance(other, Matrix):
            return self.rows == other.rows
        return NotImplemented

    def __hash__(self):
        return hash(self.rows)

    def to_json(self):
        return {"n": self.n,
                "re": [[fraction_str(a.re) for a in r] for r in self.rows],
                "im": [[fraction_str(a.im) for a in r] for r in self.rows]}

    @classmethod
    def from_json(cls, data):
        n = int(data["n"])
        re = data["re"]
        im = data.get("im") or [[0] * n for _ in range(n)]
        if len(re) != n or len(im) != n or any(len(r) != n for r in re + im):
            raise ValueError(f"matrix JSON does not describe an {n} x {n} matrix")
        for x in (x for r in re + im for x in r):
            if isinstance(x, float):
                raise ValueError("matrix entries must be integers or 'p/q' strings")
        return cls([[QQi(to_fraction(a), to_fraction(b)) for a, b in zip(r, s)]
                    for r, s in zip(re, im)])

    def __repr__(self):
        body = "; ".join(" ".join(_fmt(a) for a in r) for r in self.rows)
        return f"Matrix([{body}])"


def _fmt(z):
    if z.im == 0:
        return fraction_str(z.re)
    if z.re == 0:
        return f"{fraction_str(z.im)}i"
    return f"({fraction_str(z.re)}{'+' if z.im > 0 else '-'}{fraction_str(abs(z.im))}i)"


def HermitianMatrix(rows, skew=False):
    """Build a Matrix and insist on X = X* (or X = -X* with ``skew``)."""
    m = rows if isinstance(rows, Matrix) else Matrix(rows)
    if skew and not m.is_skew_hermitian():
        raise ValueError("matrix is not skew-hermitian")
    if not skew and not m.is_hermitian():
        raise ValueError("matrix is not hermitian")
    return m


def cayley_unitary(a):
    """(1 - A)(1 + A)^-1 for skew-hermitian A: a unitary with Q(i) entries."""
    if not a.is_skew_hermitian():
        raise ValueError("the Cayley transform needs a skew-hermitian matrix")
    one = Matrix.identity(a.n)
    return (one - a) @ (one + a).inverse()


def random_skew_hermitian(rng, n, bound=3):
    """Skew-hermitian matrix with small random Gaussian-integer entries."""
    rows = [[QQi() for _ in range(n)] for _ in range(n)]
    for i in range(n):
        rows[i][i] = QQi(0, rng.randint(-bound, bound))
        for j in range(i + 1, n):
            z = QQi(rng.randint(-bound, bound), rng.randint(-bound, bound))
            rows[i][j] = z
            rows[j][i] = -z.conjugate()
    return Matrix(rows)


def random_unitary(rng, n, bound=3):
    return cayley_unitary(random_skew_hermitian(rng, n, bound))
