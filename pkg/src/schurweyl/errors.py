import os


class ResourceLimitError(RuntimeError):
    """A brute-force computation was asked for more than its hard cap."""


def _env_int(name, default):
    raw = os.environ.get(name)
    if raw is None or raw == "":
        return default
    return int(raw)


def max_ambient():
    """Largest ambient dimension for orbit-enumerating oracles (n! orbit points)."""
    return _env_int("SCHURWEYL_MAX_AMBIENT", 7)


def max_tensor_dim():
    """Largest n**k for explicit tensor-power computations."""
    return _env_int("SCHURWEYL_MAX_TENSOR_DIM", 1024)


def check_ambient(n, cap=None):
    cap = max_ambient() if cap is None else cap
    if n > cap:
        raise ResourceLimitError(f"ambient dimension {n} exceeds the cap {cap}")


def check_tensor_dim(n, k):
    cap = max_tensor_dim()
    if n ** k > cap:
        raise ResourceLimitError(f"tensor power dimension {n}**{k} exceeds the cap {cap}")
