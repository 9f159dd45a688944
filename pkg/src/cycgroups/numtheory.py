"""Elementary number theory used by the cyclic-subgroup identities."""

_CAP = 1 << 32


def _check(n, name):
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError(f"{name} must be an int, got {type(n).__name__}")
    if n < 1:
        raise ValueError(f"{name} must be >= 1, got {n}")
    if n > _CAP:
        raise ValueError(f"{name} exceeds 2^32")


def factorize(n):
    """Prime factorization of ``n`` by trial division, as ``{p: e}``."""
    _check(n, "n")
    out = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def is_prime(n):
    if not isinstance(n, int) or n < 2:
        return False
    return factorize(n) == {n: 1}


def totient(d):
    """Euler's phi: the number of ``1 <= j <= d`` coprime to ``d``."""
    _check(d, "d")
    result = d
    for p in factorize(d):
        result = result // p * (p - 1)
    return result


def divisors(n):
    """All positive divisors of ``n`` in ascending order."""
    _check(n, "n")
    small, large = [], []
    i = 1
    while i * i <= n:
        if n % i == 0:
            small.append(i)
            if i * i != n:
                large.append(n // i)
        i += 1
    return small + large[::-1]


def prime_divisors(n):
    return sorted(factorize(n))


def p_part(n, p):
    """Largest power of ``p`` dividing ``n``."""
    q = 1
    while n % (q * p) == 0:
        q *= p
    return q
