"""Exact controllability analysis for linear constant-coefficient PDE systems.

Systems are given as rows of polynomial strings over a ring described by its
variable names, for example ``decide([["x1", "x2", "x3"]], vars=3)``.
"""

import json

from . import _core
from ._core import DomainError, Error, ParseError, RingMismatch, SchemaError

__version__ = _core.__version__

__all__ = [
    "DomainError", "Error", "ParseError", "RingMismatch", "SchemaError",
    "ci_experiment", "cross_check", "decide", "decide_1d", "determinant",
    "dimension", "groebner", "kalman_rank", "kernel_dimension", "minors",
    "parse", "patch", "rank", "run_experiment",
]


def _ring(vars, laurent):
    return {"vars": vars, "laurent": laurent}


def _system(rows, vars, laurent):
    return json.dumps({"ring": _ring(vars, laurent), "rows": rows})


def _strings(matrix):
    return [[str(v) for v in row] for row in matrix]


def parse(text, vars, laurent=False):
    """Canonical printed form of a polynomial."""
    return _core.parse(text, json.dumps(_ring(vars, laurent)))


def decide(rows, vars, laurent=False):
    """Controllability verdict: dict with status, codim ('inf' for empty), reason, rank."""
    return json.loads(_core.decide(_system(rows, vars, laurent)))


def decide_1d(rows, var="s"):
    """Univariate decision through the gcd of the maximal minors."""
    return json.loads(_core.decide_1d(_system(rows, [var], False)))


def kalman_rank(x, u):
    return _core.kalman_rank(_strings(x), _strings(u))


def cross_check(x, u):
    """Compare the Kalman rank test with the module decision on the Hautus matrix."""
    return json.loads(_core.cross_check(_strings(x), _strings(u)))


def groebner(gens, vars, order="grevlex"):
    """Reduced Groebner basis, as a list of polynomial strings."""
    out = json.loads(_core.groebner(json.dumps({"vars": vars, "gens": gens, "order": order})))
    return out["basis"]


def dimension(gens, vars):
    return json.loads(_core.dimension(json.dumps({"vars": vars, "gens": gens})))


def minors(rows, vars, size, laurent=False):
    return json.loads(_core.minors(_system(rows, vars, laurent), size))["minors"]


def determinant(rows, vars, laurent=False):
    return _core.determinant(_system(rows, vars, laurent))


def rank(rows, vars, laurent=False):
    return _core.rank(_system(rows, vars, laurent))


def run_experiment(l=1, k=2, n=2, d=2, coeff_bound=9, density="1", trials=500, seed=42, threads=1):
    """Random-sampling genericity experiment; the result includes its CSV row."""
    cfg = dict(l=l, k=k, n=n, d=d, coeff_bound=coeff_bound, density=str(density),
               trials=trials, seed=seed, threads=threads)
    return json.loads(_core.run_experiment(json.dumps(cfg)))


def ci_experiment(m=2, n=2, d=2, coeff_bound=9, density="1", trials=200, seed=42, threads=1):
    cfg = dict(m=m, n=n, d=d, coeff_bound=coeff_bound, density=str(density),
               trials=trials, seed=seed, threads=threads)
    return json.loads(_core.ci_experiment(json.dumps(cfg)))


def kernel_dimension(rows, vars, window):
    """Dimension of the solution space of a shift system on a finite window."""
    return _core.kernel_dimension(_system(rows, vars, True), list(window))


def patch(rows, vars, problems):
    """Evidence report for patching problems (dicts with window, region1, region2)."""
    doc = {"ring": _ring(vars, True), "rows": rows, "problems": list(problems)}
    return json.loads(_core.patch(json.dumps(doc)))
