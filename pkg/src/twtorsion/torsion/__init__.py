"""Torsion computation, bounds, mod-p comparison and good-prime search."""
from .engine import (
    BoundReport,
    BudgetExhausted,
    TorsionError,
    TorsionValue,
    WorkCounter,
    bound_report,
    multiplicativity_check,
    torsion,
    torsion_closed,
    torsion_deficiency_one,
)
from .goodprime import GoodPrime, SearchExhausted, find_good_prime, parse_multivariate
from .modp import ModpRow, ModpTable, bad_primes, modp_compare
