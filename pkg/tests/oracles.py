"""Reference computations written straight from the definitions.

Nothing here imports the package under test.
"""
from fractions import Fraction
from math import gcd, isqrt

import numpy as np


def class_number_by_forms(d: int) -> int:
    """Primitive reduced forms (a, b, c) of discriminant d, enumerated over a and c"""
    n = -d
    count = 0
    a = 1
    while 3 * a * a <= n:
        c = a
        while 4 * a * c - a * a <= n:
            for b in range(-a + 1, a + 1):
                if b * b - 4 * a * c != d:
                    continue
                if b < 0 and a == c:
                    continue
                if gcd(gcd(a, abs(b)), c) == 1:
                    count += 1
            c += 1
        a += 1
    return count


def primitive_form_counts(limit: int) -> np.ndarray:
    """h(-n) for 0 <= n <= limit (zero where -n is not a discriminant)"""
    counts = np.zeros(limit + 1, dtype=np.int64)
    a = 1
    while 3 * a * a <= limit:
        discriminants = []
        for b in range(-a + 1, a + 1):
            c_first = a + 1 if b < 0 else a
            c = np.arange(c_first, (limit + b * b) // (4 * a) + 1, dtype=np.int64)
            c = c[np.gcd(gcd(a, abs(b)), c) == 1]
            discriminants.append(4 * a * c - b * b)
        counts += np.bincount(np.concatenate(discriminants), minlength=limit + 1)
        a += 1
    return counts


def legendre_euler(n: int, p: int) -> int:
    value = pow(n % p, (p - 1) // 2, p)
    return -1 if value == p - 1 else value


class HurwitzTable:
    """12 H(n) for 0 < n <= limit, summing 12 h'(n/d^2) over every square d^2 dividing n"""

    def __init__(self, limit: int):
        self.h = primitive_form_counts(limit)
        weights = 12 * self.h
        # h'(-3) = 1/3 and h'(-4) = 1/2
        weights[3], weights[4] = 4, 6
        self.twelve_H = np.zeros(limit + 1, dtype=np.int64)
        d = 1
        while d * d <= limit:
            square = d * d
            self.twelve_H[square::square] += weights[1:limit // square + 1]
            d += 1

    def H(self, n: int) -> Fraction:
        if n == 0:
            return Fraction(-1, 12)
        return Fraction(int(self.twelve_H[n]), 12)


def self_intersection(p: int, N: int, table: HurwitzTable, A: int = 1) -> Fraction:
    """T_N^2 by the class number formula, looping over divisors and over x"""
    total = Fraction(0)
    for n in range(1, N + 1):
        if N % n:
            continue
        chi = legendre_euler(n, p) + legendre_euler(N * A // n, p)
        if chi == 0:
            continue
        m = (N // n) ** 2
        hp = Fraction(0)
        for x in range(-2 * isqrt(m), 2 * isqrt(m) + 1):
            if x * x <= 4 * m and (4 * m - x * x) % p == 0:
                hp += table.H((4 * m - x * x) // p)
        total += n * hp * chi
    return total / 2


def split_products(p: int, n_max: int) -> list:
    """Squarefree N > 1 whose prime factors are all quadratic residues mod p"""
    found = []
    for N in range(2, n_max + 1):
        m, q, ok = N, 2, True
        while q * q <= m and ok:
            if m % q == 0:
                m //= q
                if m % q == 0 or legendre_euler(q, p) != 1:
                    ok = False
            q += 1
        if ok and m > 1 and legendre_euler(m, p) != 1:
            ok = False
        if ok:
            found.append(N)
    return found


def norm_window_pairs(p: int, n: int, t: int, s: int) -> list:
    """(u, v) with (u + v sqrt p)/2 totally positive of norm n and lambda/lambda' in [1, eps^2).

    eps = (t + s sqrt p)/2; every v below s sqrt(n) is tried.
    """
    found = []
    v = 0
    while v * v < s * s * n:
        u_squared = 4 * n + p * v * v
        u = isqrt(u_squared)
        # lambda / eps has sqrt(p) coordinate (v t - u s)/4
        if u * u == u_squared and (u - v) % 2 == 0 and v * t - u * s < 0:
            found.append((u, v))
        v += 1
    return found
