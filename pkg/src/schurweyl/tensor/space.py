"""The tensor power V^{(x)k} of V = Q^n (or Q(i)^n) with its GL(V) x S_k action.

Basis tensors e_{i_1} (x) ... (x) e_{i_k} are keyed by 0-based index tuples.
S_k acts by place permutations: sigma moves the factor in slot sigma^-1(p)
to slot p.
"""

import itertools
from collections import Counter, namedtuple
from fractions import Fraction

from .._exact import QQi
from ..errors import check_tensor_dim
from ..weights import Weight
from .algebra import GroupAlgebraElement
from .characters import character_dimension, isotypic_projector, rank_of_vectors
from .tableaux import (Tableau, as_partition, column_antisymmetrizer, count_semistandard,
                       count_standard, partitions)


def _is_zero(c):
    return not c


class TensorVector:
    """Finite linear combination of basis tensors of (Q^n)^{(x)k}."""

    __slots__ = ("n", "k", "coeffs")

    def __init__(self, n, k, coeffs=None):
        self.n, self.k = n, k
        clean = {}
        for idx, c in dict(coeffs or {}).items():
            idx = tuple(int(i) for i in idx)
            if len(idx) != k or any(not 0 <= i < n for i in idx):
                raise ValueError(f"basis index {idx} outside (0..{n - 1})^{k}")
            if not _is_zero(c):
                clean[idx] = c
        self.coeffs = clean

    @classmethod
    def basis(cls, n, idx, coeff=1):
        idx = tuple(idx)
        return cls(n, len(idx), {idx: Fraction(coeff)})

    def _check(self, other):
        if (self.n, self.k) != (other.n, other.k):
            raise ValueError("tensor vectors from different spaces")

    def __add__(self, other):
        self._check(other)
        out = dict(self.coeffs)
        for idx, c in other.coeffs.items():
            out[idx] = out[idx] + c if idx in out else c
        return TensorVector(self.n, self.k, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        return TensorVector(self.n, self.k, {i: c * v for i, v in self.coeffs.items()})

    def inner(self, other):
        """<self, other>, linear in the first argument."""
        self._check(other)
        total = 0
        for idx, c in self.coeffs.items():
            d = other.coeffs.get(idx)
            if d is not None:
                total = total + c * (d.conjugate() if isinstance(d, QQi) else d)
        return total

    def weights(self):
        """Diagonal-torus weights of the basis tensors in the support."""
        return {tensor_weight(idx, self.n) for idx in self.coeffs}

    def is_zero(self):
        return not self.coeffs

    def __eq__(self, other):
        if isinstance(other, TensorVector):
            return (self.n, self.k) == (other.n, other.k) and self.coeffs == other.coeffs
        return NotImplemented

    def __repr__(self):
        terms = " + ".join(f"{c}*e{tuple(i + 1 for i in idx)}"
                           for idx, c in sorted(self.coeffs.items()))
        return f"TensorVector(n={self.n}, k={self.k}: {terms or '0'})"


def tensor_weight(idx, n):
    counts = [0] * n
    for i in idx:
        counts[i] += 1
    return Weight.from_values(counts)


def place_permute(p, idx):
    out = [0] * len(idx)
    for q, i in enumerate(idx):
        out[p[q]] = i
    return tuple(out)


class TensorMap:
    """Linear map on (Q^n)^{(x)k} given by a group algebra element."""

    def __init__(self, element, n):
        self.element = element
        self.n = n
        self.k = element.k

    def apply_basis(self, idx):
        out = {}
        for p, c in self.element.terms.items():
            j = place_permute(p, idx)
            out[j] = out.get(j, 0) + c
        return TensorVector(self.n, self.k, out)

    def __call__(self, v):
        if (v.n, v.k) != (self.n, self.k):
            raise ValueError("dimension mismatch between map and vector")
        out = {}
        for idx, c in v.coeffs.items():
            for p, a in self.element.terms.items():
                j = place_permute(p, idx)
                out[j] = out[j] + a * c if j in out else a * c
        return TensorVector(self.n, self.k, out)

    def block_rank(self, block):
        """Rank of the map restricted to span(block); blocks are weight spaces."""
        pos = {idx: i for i, idx in enumerate(block)}
        rows = []
        for idx in block:
            img = self.apply_basis(idx)
            row = [0] * len(block)
            for j, c in img.coeffs.items():
                row[pos[j]] = c
            rows.append(row)
        return rank_of_vectors(rows)

    def rank(self):
        return sum(self.block_rank(b) for b in weight_blocks(self.n, self.k).values())


def act_on_tensor(a, n, k=None):
    if not isinstance(a, GroupAlgebraElement):
        raise TypeError("expected a group algebra element")
    if k is not None and k != a.k:
        raise ValueError(f"element lives in Q[S_{a.k}], not Q[S_{k}]")
    return TensorMap(a, n)


def weight_blocks(n, k):
    """Basis index tuples grouped by weight (content vector)."""
    check_tensor_dim(n, k)
    blocks = {}
    for idx in itertools.product(range(n), repeat=k):
        blocks.setdefault(tensor_weight(idx, n), []).append(idx)
    return blocks


def tableau_vector(T, n):
    """c(T) e_T with e_T carrying e_r in every slot whose entry sits in row r."""
    rows = T.row_index()
    if len(T.shape.parts) > n:
        raise ValueError(f"shape {T.shape.parts} has more than n={n} rows")
    idx = tuple(rows[j] for j in range(1, T.shape.n + 1))
    return act_on_tensor(column_antisymmetrizer(T), n)(TensorVector.basis(n, idx))


def highest_weight_vector(shape, n):
    shape = as_partition(shape)
    if len(shape.parts) > n:
        raise ValueError(f"shape {shape.parts} has more than n={n} parts")
    return tableau_vector(Tableau.canonical(shape), n)


def apply_elementary(a, b, v, coeff=1):
    """Derivation action of coeff*E_ab (e_b -> e_a), summed over all slots."""
    out = {}
    for idx, c in v.coeffs.items():
        for p, i in enumerate(idx):
            if i == b:
                j = idx[:p] + (a,) + idx[p + 1:]
                val = coeff * c
                out[j] = out[j] + val if j in out else val
    return TensorVector(v.n, v.k, out)


def apply_lie(X, v):
    """d pi(X) v = sum over slots of X acting in that slot; X is any n x n matrix."""
    total = TensorVector(v.n, v.k)
    for a in range(v.n):
        for b in range(v.n):
            c = X[a][b]
            if c:
                total = total + apply_elementary(a, b, v, c)
    return total


def raising_operators(n):
    """Index pairs (a, b), a < b, of the positive root vectors E_ab."""
    return [(a, b) for a in range(n) for b in range(a + 1, n)]


SchurWeylComponent = namedtuple("SchurWeylComponent", "partition dimS dimM")


def schur_weyl_decompose(n, k):
    """Isotypic decomposition of (Q^n)^{(x)k}, one entry per partition of k.

    dimS is read off the exact rank of P_lambda divided by dimM = f^lambda;
    it is checked against the semistandard tableau count.
    """
    check_tensor_dim(n, k)
    out = []
    for shape in partitions(k):
        P = act_on_tensor(isotypic_projector(shape, k), n)
        r = P.rank()
        dim_m = count_standard(shape)
        if r % dim_m:
            raise AssertionError(f"rank {r} of P_{shape.parts} is not a multiple of {dim_m}")
        dim_s = r // dim_m
        expected = count_semistandard(shape, n) if len(shape.parts) <= n else 0
        if dim_s != expected:
            raise AssertionError(
                f"P_{shape.parts}: rank gives dim S = {dim_s}, tableaux give {expected}")
        out.append(SchurWeylComponent(shape, dim_s, dim_m))
    return out


def weight_multiset(shape, n):
    """Torus weights of S_lambda(Q^n) with multiplicity.

    Each weight space of the image of P_lambda is a block; its rank divided by
    f^lambda is the multiplicity of that weight in S_lambda.
    """
    shape = as_partition(shape)
    if len(shape.parts) > n:
        raise ValueError(f"shape {shape.parts} has more than n={n} parts")
    k = shape.n
    P = act_on_tensor(isotypic_projector(shape, k), n)
    f = character_dimension(shape)
    out = Counter()
    for wt, block in weight_blocks(n, k).items():
        r = P.block_rank(block)
        if r:
            if r % f:
                raise AssertionError(f"block rank {r} not divisible by f = {f}")
            out[wt] = r // f
    return out


def m_lambda_span_dimension(shape, n):
    """dim span{c(T) e_T : T a tableau of the shape}."""
    shape = as_partition(shape)
    k = shape.n
    vecs = []
    rows = [list(r) for r in Tableau.canonical(shape).rows]
    for perm in itertools.permutations(range(1, k + 1)):
        it = iter(perm)
        T = Tableau(shape, tuple(tuple(next(it) for _ in r) for r in rows))
        vecs.append(tableau_vector(T, n))
    keys = sorted({i for v in vecs for i in v.coeffs})
    return rank_of_vectors([[v.coeffs.get(i, 0) for i in keys] for v in vecs]) if keys else 0
