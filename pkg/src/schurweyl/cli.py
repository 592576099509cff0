"""JSON command-line front end.

Exit codes: 0 success, 2 bad input, 3 resource limit, 4 oracle disagreement.
"""

import argparse
import json
import sys
from fractions import Fraction

import sympy as sp

from . import hull_oracle, majorization
from ._exact import fraction_str
from .errors import ResourceLimitError, check_ambient, check_tensor_dim
from .hull_oracle import MAX_VERTEX_AMBIENT, distinct_permutations
from .momentum import (Matrix, coadjoint_orbit_member, d_lambda, in_momentum_set_matrix,
                       in_norm_momentum_set_matrix, kaehler_value, rational_eigenvalues,
                       spectral_s_k, triple_decompose)
from .tensor import (as_partition, count_semistandard, hook_length_dimension,
                     schur_weyl_decompose, weight_multiset)
from .weights import OrbitSignature, RationalWeight, Weight, canonicalize, orbit_equal

EXIT_OK, EXIT_PARSE, EXIT_RESOURCE, EXIT_ORACLE = 0, 2, 3, 4


class InputError(ValueError):
    pass


class OracleDisagreement(RuntimeError):
    def __init__(self, payload):
        super().__init__("oracle disagrees with the library answer")
        self.payload = payload


def _load(text, what):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{what}: invalid JSON ({exc.msg})") from None


def parse_weight(text, rational=False, what="weight"):
    """A JSON object {"index": value} (optionally under "entries") or a dense list."""
    data = _load(text, what)
    cls = RationalWeight if rational else Weight
    try:
        if isinstance(data, list):
            if any(isinstance(v, float) for v in data):
                raise InputError(f"{what}: floats are not accepted; use 'p/q' strings")
            return cls.from_values(data)
        return cls.from_json(data)
    except InputError:
        raise
    except (TypeError, ValueError) as exc:
        raise InputError(f"{what}: {exc}") from None


def parse_matrix(text):
    data = _load(text, "matrix")
    try:
        return Matrix.from_json(data)
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"matrix: {exc}") from None


def _num(q):
    if isinstance(q, Fraction):
        return fraction_str(q)
    return str(q)


def _values_json(w):
    return w.to_json()["entries"]


def _signature_json(sig):
    return _values_json(sig.representative())


def _compressed(*weights, pad=0):
    """Dense vectors over the joint support (relabelled 0..m-1) plus ``pad`` zero slots."""
    idx = sorted(set().union(*(w.support() for w in weights)))
    return [[Fraction(w.value(j)) for j in idx] + [Fraction(0)] * pad for w in weights]


def _oracle_ambient(args, minimum):
    n = args.ambient if args.ambient is not None else max(minimum, 1)
    if n < minimum:
        raise InputError(f"--ambient {n} is smaller than the joint support size {minimum}")
    check_ambient(n)
    return n


# subcommands ---------------------------------------------------------------

def cmd_orbit_eq(args):
    lam, mu = parse_weight(args.lam, what="lambda"), parse_weight(args.mu, what="mu")
    return {"equal": orbit_equal(lam, mu),
            "lambda": _signature_json(canonicalize(lam)),
            "mu": _signature_json(canonicalize(mu))}


def cmd_hull(args):
    lam = parse_weight(args.lam, what="lambda")
    mu = parse_weight(args.mu, rational=True, what="mu")
    test = majorization.in_norm_hull if args.mode == "norm" else majorization.in_weakstar_hull
    out = {"member": test(mu, lam)}
    if args.oracle:
        m = len(mu.support() | lam.support())
        n = _oracle_ambient(args, m)
        mu_v, lam_v = _compressed(mu, lam, pad=n - m)
        if args.mode == "norm":
            ref = hull_oracle.hull_member_bruteforce(mu_v, lam_v, n)
        else:
            ref = hull_oracle.weakstar_member_bruteforce(mu_v, lam, n)
        if ref != out["member"]:
            raise OracleDisagreement({**out, "oracle": ref})
        out["oracle_agrees"] = True
    return out


def cmd_extremes(args):
    lam = parse_weight(args.lam, what="lambda")
    if args.mode == "norm":
        ext = majorization.extreme_points_norm_hull(lam)
    else:
        ext = majorization.extreme_signatures_weakstar(lam)
    out = {"extremes": [_signature_json(s) for s in ext.sorted()]}
    if args.oracle:
        n = _oracle_ambient(args, len(lam))
        if args.mode == "norm":
            verts = hull_oracle.permutahedron_vertices(lam, n)
        else:
            if n > MAX_VERTEX_AMBIENT:
                raise ResourceLimitError(f"vertex enumeration is capped at n={MAX_VERTEX_AMBIENT}")
            verts = hull_oracle.polytope_vertices(lam, n)
        found = {canonicalize(RationalWeight.from_values(v)) for v in verts}
        predicted = {s for s in ext if s.size() <= n}
        if found != predicted:
            raise OracleDisagreement({**out, "oracle": sorted(
                (_values_json(s.representative()) for s in found), key=json.dumps)})
        out["oracle_agrees"] = True
    return out


def cmd_separate(args):
    lam, mu = parse_weight(args.lam, what="lambda"), parse_weight(args.mu, what="mu")
    if orbit_equal(lam, mu):
        raise InputError("lambda and mu lie in the same orbit; nothing to separate")
    cert = majorization.separating_vector(lam, mu)
    out = cert.to_json()
    if args.oracle:
        outside, inside = cert.outside_and_inside(lam, mu)
        m = len(lam.support() | mu.support())
        n = _oracle_ambient(args, m)
        out_v, _ = _compressed(outside, inside, pad=n - m)
        inside_hull = hull_oracle.weakstar_member_bruteforce(out_v, inside, n)
        if not cert.verify(lam, mu) or inside_hull or cert.gap < 1:
            raise OracleDisagreement({**out, "oracle_inside": inside_hull})
        out["oracle_agrees"] = True
    return out


def cmd_support(args):
    lam = parse_weight(args.lam, what="lambda")
    x = parse_weight(args.x, rational=True, what="x")
    value = majorization.support_functional(lam, x)
    out = {"value": _num(value)}
    if args.oracle:
        n = len(x) + len(lam)
        check_ambient(n)
        xs = [x.value(j) for j in sorted(x.support())] + [Fraction(0)] * len(lam)
        lv = lam.values() + [0] * len(x)
        ref = max((sum((a * b for a, b in zip(p, xs)), Fraction(0))
                   for p in distinct_permutations(lv)), default=Fraction(0))
        if ref != value:
            raise OracleDisagreement({**out, "oracle": _num(ref)})
        out["oracle_agrees"] = True
    return out


def cmd_decompose(args):
    check_tensor_dim(args.n, args.k)
    comps = schur_weyl_decompose(args.n, args.k)
    out = [{"partition": list(c.partition.parts), "dimS": c.dimS, "dimM": c.dimM} for c in comps]
    if args.oracle:
        ok = sum(c.dimS * c.dimM for c in comps) == args.n ** args.k and all(
            c.dimM == hook_length_dimension(c.partition)
            and c.dimS == (count_semistandard(c.partition, args.n)
                           if len(c.partition) <= args.n else 0)
            for c in comps)
        if not ok:
            raise OracleDisagreement({"decomposition": out})
    return out


def cmd_weights_of(args):
    lam = parse_weight(args.lam, what="lambda")
    shape = as_partition(lam)
    if len(shape) > args.n:
        raise InputError(f"shape {list(shape.parts)} has more than n={args.n} parts")
    check_tensor_dim(args.n, shape.n)
    mult = weight_multiset(shape, args.n)
    out = [{"weight": _values_json(w), "multiplicity": m}
           for w, m in sorted(mult.items(), key=lambda wm: [-v for v in wm[0].dense(args.n)])]
    if args.oracle:
        target = Weight.from_values(shape.parts)
        dominated = set()
        for counts in _compositions(shape.n, args.n):
            w = Weight.from_values(counts)
            if majorization.in_norm_hull(w, target):
                dominated.add(w)
        if dominated != set(mult):
            raise OracleDisagreement({"weights": out})
    return out


def _compositions(total, parts):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _hermitian_arg(args):
    X = parse_matrix(args.matrix)
    if not X.is_hermitian():
        raise InputError("matrix is not hermitian")
    return X


def cmd_momentum_check(args):
    X = _hermitian_arg(args)
    lam = parse_weight(args.lam, what="lambda")
    try:
        d_lambda(lam, X.n)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    test = in_norm_momentum_set_matrix if args.mode == "norm" else in_momentum_set_matrix
    out = {"member": test(X, lam), "coadjoint_orbit": coadjoint_orbit_member(X, lam)}
    if args.oracle:
        eig = rational_eigenvalues(X)
        if eig is None:
            raise InputError("--oracle needs a matrix with rational spectrum")
        spec = RationalWeight.from_values(eig)
        n = _oracle_ambient(args, X.n)
        ev = list(eig) + [Fraction(0)] * (n - X.n)
        lam_v = list(lam.dense(X.n)) + [0] * (n - X.n)
        if args.mode == "norm":
            ref = hull_oracle.hull_member_bruteforce(ev, lam_v, n)
        else:
            ref = hull_oracle.weakstar_member_bruteforce(ev, lam, n)
        orbit_ref = OrbitSignature.of(spec.values()) == canonicalize(lam)
        if ref != out["member"] or orbit_ref != out["coadjoint_orbit"]:
            raise OracleDisagreement({**out, "oracle": ref, "oracle_orbit": orbit_ref})
        out["oracle_agrees"] = True
    return out


def cmd_triple(args):
    X = parse_matrix(args.matrix)
    lam = parse_weight(args.lam, what="lambda")
    try:
        t = triple_decompose(X, lam)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    out = t.to_json()
    if args.oracle:
        D = d_lambda(lam, X.n)
        if t.total() != X or not t.block_diagonal.commutes_with(D):
            raise OracleDisagreement(out)
        out["oracle_agrees"] = True
    return out


def cmd_kaehler(args):
    Z = parse_matrix(args.matrix)
    lam = parse_weight(args.lam, what="lambda")
    try:
        value = kaehler_value(lam, Z)
    except AssertionError as exc:
        raise OracleDisagreement({"error": str(exc)}) from None
    except ValueError as exc:
        raise InputError(str(exc)) from None
    return {"value": _num(value)}


def cmd_sk(args):
    X = _hermitian_arg(args)
    try:
        value = spectral_s_k(X, args.k, padded=not args.finite)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    out = {"s_k": _num(value)}
    if args.oracle:
        # independent spectrum: sympy's own eigenvalue routine
        M = sp.Matrix(X.n, X.n, lambda i, j: sp.Rational(X[i, j].re.numerator, X[i, j].re.denominator)
                      + sp.I * sp.Rational(X[i, j].im.numerator, X[i, j].im.denominator))
        eig = sorted((e for e, m in M.eigenvals().items() for _ in range(m)),
                     key=lambda e: sp.re(e).evalf(50), reverse=True)
        if not args.finite:
            eig = [e for e in eig if sp.re(e).evalf(50) > 0]
        ref = sp.nsimplify(sp.Add(*eig[:args.k]))
        val = sp.sympify(value) if not isinstance(value, Fraction) else sp.Rational(
            value.numerator, value.denominator)
        if abs((ref - val).evalf(50)) > sp.Float("1e-40"):
            raise OracleDisagreement({**out, "oracle": str(ref)})
        out["oracle_agrees"] = True
    return out


COMMANDS = {
    "orbit-eq": cmd_orbit_eq, "hull": cmd_hull, "extremes": cmd_extremes,
    "separate": cmd_separate, "support": cmd_support, "decompose": cmd_decompose,
    "weights-of": cmd_weights_of, "momentum-check": cmd_momentum_check,
    "triple": cmd_triple, "kaehler": cmd_kaehler, "sk": cmd_sk,
}

_FLAGS = {
    "orbit-eq": ("lam", "mu"), "hull": ("lam", "mu", "mode"), "extremes": ("lam", "mode"),
    "separate": ("lam", "mu"), "support": ("lam", "x"), "decompose": ("n", "k"),
    "weights-of": ("lam", "n"), "momentum-check": ("lam", "matrix", "mode"),
    "triple": ("lam", "matrix"), "kaehler": ("lam", "matrix"), "sk": ("matrix", "k", "finite"),
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


def build_parser():
    parser = _Parser(prog="schurweyl", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name, flags in _FLAGS.items():
        p = sub.add_parser(name)
        if "lam" in flags:
            p.add_argument("--lambda", dest="lam", required=True, help="weight as JSON")
        if "mu" in flags:
            p.add_argument("--mu", required=True, help="weight as JSON")
        if "x" in flags:
            p.add_argument("--x", required=True, help="rational test vector as JSON")
        if "mode" in flags:
            p.add_argument("--mode", choices=("weakstar", "norm"), default="weakstar")
        if "matrix" in flags:
            p.add_argument("--matrix", required=True, help='{"n":..,"re":[[..]],"im":[[..]]}')
        if "n" in flags:
            p.add_argument("--n", type=int, required=True)
        if "k" in flags:
            p.add_argument("--k", type=int, required=True)
        if "finite" in flags:
            p.add_argument("--finite", action="store_true",
                           help="sum exactly k of the n eigenvalues (no zero padding)")
        p.add_argument("--ambient", type=int, help="ambient size for --oracle checks")
        p.add_argument("--oracle", action="store_true", help="re-verify with a brute-force oracle")
        p.add_argument("--seed", type=int, default=0, help="accepted for reproducible scripting")
        p.add_argument("--output", help="write the JSON result to this file instead of stdout")
    return parser


def _emit(obj, path=None, stream=None):
    text = json.dumps(obj, separators=(",", ":"), sort_keys=False)
    if path:
        with open(path, "w") as fh:
            fh.write(text + "\n")
    else:
        (stream or sys.stdout).write(text + "\n")


def run(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        if args.ambient is not None and args.ambient < 1:
            raise InputError("--ambient must be positive")
        result = COMMANDS[args.command](args)
    except InputError as exc:
        _emit({"error": str(exc)}, stream=stderr)
        return EXIT_PARSE
    except ResourceLimitError as exc:
        _emit({"error": str(exc)}, stream=stderr)
        return EXIT_RESOURCE
    except OracleDisagreement as exc:
        _emit(exc.payload, stream=stdout)
        _emit({"error": str(exc)}, stream=stderr)
        return EXIT_ORACLE
    _emit(result, args.output, stdout)
    return EXIT_OK


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
