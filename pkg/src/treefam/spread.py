"""Exact spread verification for the ambient family of all spanning trees.

A family F is r-spread when |F(X)| <= r^(-|X|) |F| for every edge set X, and
(r,t)-spread when additionally |F(U)| <= r^(|T|-|U|) |F(T)| for every pair
T <= U with |T| <= t.  For F = T_n both sides are closed-form counts, so the
checks here are exhaustive over forests within an edge budget and every
comparison is done on cross-multiplied integers (r is a rational p/q) --
the single-edge case sits exactly on the boundary at r = n/2, so floats
would be wrong.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Optional

from .counting import count_trees_containing
from .trees import cayley_count, iter_forests_with_count


class SpreadReport:
    """Outcome of a spread verification, with a re-checkable witness on failure.

    witness is None when verified; otherwise a dict holding the violating
    forest pair and both sides of the cross-multiplied inequality.
    """

    __slots__ = ("n", "r", "t", "edge_budget", "verified", "witness", "checked")

    def __init__(self, n, r, t, edge_budget, verified, witness, checked):
        self.n = n
        self.r = r
        self.t = t
        self.edge_budget = edge_budget
        self.verified = verified
        self.witness = witness
        self.checked = checked

    def __repr__(self):
        status = "verified" if self.verified else f"violated by {self.witness}"
        return (
            f"SpreadReport(n={self.n}, r={self.r}, t={self.t}, "
            f"budget={self.edge_budget}, {status})"
        )

    def to_dict(self) -> dict:
        d = {
            "n": self.n,
            "r": f"{self.r.numerator}/{self.r.denominator}",
            "t": self.t,
            "edge_budget": self.edge_budget,
            "verified": self.verified,
            "pairs_checked": self.checked,
        }
        if self.witness is not None:
            d["witness"] = {
                k: (str(v) if isinstance(v, int) else v)
                for k, v in self.witness.items()
            }
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def verify_r_spread(n: int, r, edge_budget: Optional[int] = None) -> SpreadReport:
    """Check |T_n(X)| <= r^(-|X|) |T_n| for every forest X with |X| <= budget.

    Non-forest X have |T_n(X)| = 0 and cannot violate, so only forests are
    iterated.  The inequality is compared as

        |T_n[X]| * p^|X|  <=  n^(n-2) * q^|X|      (r = p/q).

    Work grows with the number of forests within the budget; full-budget
    exhaustion is practical up to n = 9 or so.
    """
    r = Fraction(r)
    if r <= 1:
        raise ValueError(f"r={r} must exceed 1")
    if edge_budget is None:
        edge_budget = n - 1
    p, q = r.numerator, r.denominator
    total = cayley_count(n)
    ppow = [p ** k for k in range(edge_budget + 1)]
    qpow = [q ** k for k in range(edge_budget + 1)]
    checked = 0
    for forest, count in iter_forests_with_count(n, edge_budget):
        k = len(forest)
        checked += 1
        if count * ppow[k] > total * qpow[k]:
            witness = {
                "X": [list(e) for e in forest],
                "count_X": count,
                "lhs": count * ppow[k],
                "rhs": total * qpow[k],
            }
            return SpreadReport(n, r, 0, edge_budget, False, witness, checked)
    return SpreadReport(n, r, 0, edge_budget, True, None, checked)


def verify_rt_spread(
    n: int, r, t: int, edge_budget: Optional[int] = None
) -> SpreadReport:
    """Check the (r,t)-spread chain on T_n exhaustively within the budget.

    For every forest U with |U| <= budget and every subset T of U with
    |T| <= t, compares

        |T_n[U]| * p^(|U|-|T|)  <=  |T_n[T]| * q^(|U|-|T|)      (r = p/q).

    Pairs are iterated as U plus subsets T of U; subset counts are memoized
    across different U.  As with verify_r_spread, full-budget exhaustion is
    practical up to n = 9 or so.
    """
    from itertools import combinations

    r = Fraction(r)
    if r <= 1:
        raise ValueError(f"r={r} must exceed 1")
    if t < 0:
        raise ValueError(f"t={t} must be >= 0")
    if edge_budget is None:
        edge_budget = n - 1
    p, q = r.numerator, r.denominator
    ppow = [p ** k for k in range(edge_budget + 1)]
    qpow = [q ** k for k in range(edge_budget + 1)]
    memo = {}

    def subset_count(sub):
        c = memo.get(sub)
        if c is None:
            c = count_trees_containing(n, sub)
            memo[sub] = c
        return c

    checked = 0
    for u_forest, count_u in iter_forests_with_count(n, edge_budget):
        ku = len(u_forest)
        for kt in range(min(t, ku) + 1):
            gap = ku - kt
            lhs = count_u * ppow[gap]
            for t_forest in combinations(u_forest, kt):
                checked += 1
                count_t = subset_count(t_forest)
                if lhs > count_t * qpow[gap]:
                    witness = {
                        "T": [list(e) for e in t_forest],
                        "U": [list(e) for e in u_forest],
                        "count_T": count_t,
                        "count_U": count_u,
                        "lhs": lhs,
                        "rhs": count_t * qpow[gap],
                    }
                    return SpreadReport(n, r, t, edge_budget, False, witness, checked)
    return SpreadReport(n, r, t, edge_budget, True, None, checked)
