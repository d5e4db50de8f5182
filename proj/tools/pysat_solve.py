#!/usr/bin/env python3
"""Solve DIMACS files with python-sat and print results in competition format.

With --batch, any number of files are solved in turn and each result is
preceded by a `c file PATH` line.
"""

import sys

from pysat.formula import CNF
from pysat.solvers import Solver


def solve(path: str) -> bool:
    cnf = CNF(from_file=path)
    with Solver(name="minisat22", bootstrap_with=cnf.clauses) as s:
        if not s.solve():
            print("s UNSATISFIABLE")
            return False
        model = s.get_model() or []
    print("s SATISFIABLE")
    print("v " + " ".join(str(l) for l in model) + " 0")
    return True


def main() -> int:
    args = sys.argv[1:]
    if len(args) == 1 and args[0] != "--batch":
        return 10 if solve(args[0]) else 20
    if not args or args[0] != "--batch":
        print("usage: pysat_solve.py FILE.cnf | --batch FILE.cnf...", file=sys.stderr)
        return 2
    for path in args[1:]:
        print("c file " + path)
        solve(path)
    return 0


if __name__ == "__main__":
    sys.exit(main())
