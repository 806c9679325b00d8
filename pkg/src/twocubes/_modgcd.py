"""Univariate gcd over Q(w) by reduction modulo primes p = 1 (mod 3).

For such p the ring Z[w]/(p) splits as F_p x F_p via w -> (r, r^2), r a
cube root of unity mod p.  The monic gcd is computed under both embeddings,
the pair is folded back to a + b w mod p, the residues are combined by CRT
and lifted to Q by rational reconstruction.  Polynomials here are integer
coefficient lists, lowest power first.
"""

from __future__ import annotations

from math import isqrt

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_PRIME_TOP = 1 << 62
_MAX_PRIMES = 400

_primes: list = []


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _cube_root_of_unity(p: int) -> int:
    g = 2
    while True:
        r = pow(g, (p - 1) // 3, p)
        if r != 1:
            return r
        g += 1


def primes():
    """Primes p = 1 (mod 3) below 2^62, descending, paired with a cube root of 1."""
    i = 0
    while i < _MAX_PRIMES:
        if i == len(_primes):
            n = _primes[-1][0] - 6 if _primes else _PRIME_TOP - (_PRIME_TOP % 6) + 1
            while not _is_prime(n):
                n -= 6
            _primes.append((n, _cube_root_of_unity(n)))
        yield _primes[i]
        i += 1


def _trim(u):
    while u and u[-1] == 0:
        u.pop()
    return u


def _gcd_mod(u, v, p):
    """Monic gcd of u, v over F_p."""
    u, v = _trim([c % p for c in u]), _trim([c % p for c in v])
    while v:
        inv = pow(v[-1], -1, p)
        v = [c * inv % p for c in v]
        dv = len(v) - 1
        u = list(u)
        for i in range(len(u) - 1, dv - 1, -1):
            c = u[i]
            if c:
                k = i - dv
                for j in range(dv):
                    u[k + j] = (u[k + j] - c * v[j]) % p
        u = _trim(u[:dv])
        u, v = v, u
    inv = pow(u[-1], -1, p)
    return [c * inv % p for c in u]


def _image(a, b, r, p):
    return [(x + y * r) % p for x, y in zip(a, b)]


def _rational_reconstruct(u, m):
    """(num, den) with num/den = u mod m and |num|, den <= sqrt(m/2), or None."""
    bound = isqrt(m // 2)
    r0, r1 = m, u % m
    s0, s1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    if s1 == 0 or abs(s1) > bound:
        return None
    if s1 < 0:
        r1, s1 = -r1, -s1
    return r1, s1


def _lift(res_a, res_b, m):
    """Rational reconstruction of every coefficient; integer vectors or None."""
    fracs = []
    for u in list(res_a) + list(res_b):
        rr = _rational_reconstruct(u, m)
        if rr is None:
            return None
        fracs.append(rr)
    den = 1
    for _, d in fracs:
        den = den * d // _gcd(den, d)
    ints = [n * (den // d) for n, d in fracs]
    k = len(res_a)
    return ints[:k], ints[k:]


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return abs(a)


def gcd_qomega(fa, fb, ga, gb, check):
    """Gcd of (fa + fb w) and (ga + gb w) as integer vectors (ha, hb).

    ``check(ha, hb, a, b)`` must confirm exact divisibility; a lift is
    returned only once it divides both inputs.  Returns (None, None) if the
    prime supply runs out.
    """
    best = None  # degree of the current candidate
    modulus = 1
    res_a = res_b = None
    previous = None
    for p, r in primes():
        r2 = r * r % p
        lead = [(fa[-1] + fb[-1] * s) % p for s in (r, r2)] + [(ga[-1] + gb[-1] * s) % p for s in (r, r2)]
        if 0 in lead:
            continue
        h1 = _gcd_mod(_image(fa, fb, r, p), _image(ga, gb, r, p), p)
        h2 = _gcd_mod(_image(fa, fb, r2, p), _image(ga, gb, r2, p), p)
        if len(h1) != len(h2):
            continue
        deg = len(h1) - 1
        if deg == 0:
            return [1], [0]
        if best is not None and deg > best:
            continue
        if best is None or deg < best:
            best, modulus, res_a, res_b, previous = deg, 1, None, None, None
        # h = a + b w with h1 = a + b r, h2 = a + b r^2
        inv = pow((r - r2) % p, -1, p)
        bs = [(u - v) * inv % p for u, v in zip(h1, h2)]
        as_ = [(u - b * r) % p for u, b in zip(h1, bs)]
        if res_a is None:
            res_a, res_b, modulus = as_, bs, p
        else:
            minv = pow(modulus % p, -1, p)
            res_a = [x + modulus * ((y - x) * minv % p) for x, y in zip(res_a, as_)]
            res_b = [x + modulus * ((y - x) * minv % p) for x, y in zip(res_b, bs)]
            modulus *= p
        lifted = _lift(res_a, res_b, modulus)
        if lifted is None:
            continue
        if lifted == previous and check(*lifted, fa, fb) and check(*lifted, ga, gb):
            return lifted
        previous = lifted
    return None, None
