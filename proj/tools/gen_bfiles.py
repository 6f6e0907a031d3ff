#!/usr/bin/env python3
# Copyright 2026 The hofg Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Regenerates the b-file fixtures under tests/fixtures/.

The terms are computed here in Python, independently of the C++ library:
A005206 from a(0) = 0, a(n) = n - a(a(n-1)), and A123070 as the level-wise
mirror of A005206 in its breadth-first labeled tree. Both files use OEIS
offset 0.
"""

import argparse
import pathlib

TERMS = 10_001


def fibonacci(count):
    fib = [0, 1]
    while len(fib) < count:
        fib.append(fib[-1] + fib[-2])
    return fib


def hofstadter_g(limit):
    a = [0] * (limit + 1)
    for n in range(1, limit + 1):
        a[n] = n - a[a[n - 1]]
    return a


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", type=pathlib.Path,
                        default=pathlib.Path(__file__).resolve().parent.parent
                        / "tests" / "fixtures")
    parser.add_argument("--terms", type=int, default=TERMS)
    args = parser.parse_args()

    fib = fibonacci(64)
    # Mirroring stays within a tree level, whose last label is a Fibonacci
    # number at most phi times the argument.
    g = hofstadter_g(2 * args.terms + 2)

    def level(n):
        k = 1
        while not (fib[k + 1] + 1 <= n <= fib[k + 2]):
            k += 1
        return k

    def mirror(n):
        return n if n <= 1 else 1 + fib[level(n) + 3] - n

    gbar = [mirror(g[mirror(n)]) for n in range(args.terms)]

    args.out.mkdir(parents=True, exist_ok=True)
    for name, title, values in (
        ("b005206.txt", "A005206 Hofstadter G-sequence", g[: args.terms]),
        ("b123070.txt", "A123070 mirror (flipped) Hofstadter G-sequence", gbar),
    ):
        lines = [
            f"# {title}, terms 0..{args.terms - 1}",
            "# Regenerated by tools/gen_bfiles.py (not downloaded from oeis.org).",
        ]
        lines += [f"{n} {v}" for n, v in enumerate(values)]
        (args.out / name).write_text("\n".join(lines) + "\n")


if __name__ == "__main__":
    main()
