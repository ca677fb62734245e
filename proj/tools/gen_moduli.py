#!/usr/bin/env python3
"""Regenerate data/moduli.txt: one primitive monic modulus per prime power q <= 2^16.

For each (p, k) the modulus is the first primitive polynomial when the
coefficient vector (c_{k-1}, ..., c_0) is read as a base-p number.
"""
import sys


def primes_upto(n):
    sieve = bytearray([1]) * (n + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, int(n ** 0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return [i for i in range(n + 1) if sieve[i]]


def factor(n):
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def polymulmod(a, b, f, p):
    k = len(f) - 1
    res = [0] * (2 * k - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                res[i + j] = (res[i + j] + x * y) % p
    for i in range(len(res) - 1, k - 1, -1):
        c = res[i]
        if c:
            for j in range(k + 1):
                res[i - k + j] = (res[i - k + j] - c * f[j]) % p
    return res[:k]


def xpow(e, f, p):
    k = len(f) - 1
    result = [1] + [0] * (k - 1)
    base = [0, 1] + [0] * (k - 2) if k > 1 else [(-f[0]) % p]
    while e:
        if e & 1:
            result = polymulmod(result, base, f, p)
        base = polymulmod(base, base, f, p)
        e >>= 1
    return result


def is_primitive(f, p):
    k = len(f) - 1
    order = p ** k - 1
    one = [1] + [0] * (k - 1)
    if xpow(order, f, p) != one:
        return False
    return all(xpow(order // r, f, p) != one for r in factor(order))


def modulus(p, k):
    # f stored low degree first, monic
    for n in range(1, p ** k):
        coeffs = [(n // p ** i) % p for i in range(k)]
        if coeffs[0] == 0:
            continue
        f = coeffs + [1]
        if is_primitive(f, p):
            return f
    raise RuntimeError((p, k))


def main():
    limit = int(sys.argv[1]) if len(sys.argv) > 1 else 1 << 16
    print("# p k c_0 c_1 ... c_{k-1} (monic modulus, primitive)")
    for p in primes_upto(limit):
        k, q = 1, p
        while q <= limit:
            f = modulus(p, k)
            print(p, k, *f[:-1])
            k += 1
            q *= p


if __name__ == "__main__":
    main()
