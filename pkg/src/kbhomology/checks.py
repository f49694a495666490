"""Randomized identity suites with deterministic seeds and shrinking.

Each identity is a generator of random inputs plus a predicate.  A suite
runs every identity ``trials`` times from one seeded RNG; the first failing
input is shrunk by deleting monomials while the predicate keeps failing.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Any, Callable, List, Optional, Sequence, Tuple

from .calculus import (
    PoissonBivector,
    PolyForm,
    PolyVector,
    d_pi_nabla,
    delta_pi,
    hamiltonian,
    interior,
    koszul_bracket,
    lichnerowicz,
    partial,
    pi_sharp,
    schouten,
    tau,
    vector_wedge,
    wedge,
)
from .cech import (
    COVER,
    CechCochain,
    cech_differential,
    cochain_basis,
    delta_pi_cochain,
    form_window,
    is_regular_section,
    total_differential,
)
from .gaussian import GaussianRational
from .laurent import LaurentPoly

SUITES = ("operators", "chain-map", "cech", "all")


def _sign(k: int) -> int:
    return -1 if k % 2 else 1


# random objects ----------------------------------------------------------


def random_gaussian(rng: random.Random, bound: int = 3) -> GaussianRational:
    den = rng.choice((1, 1, 1, 2, 3))
    return GaussianRational(rng.randint(-bound, bound), rng.randint(-1, 1)) / den


def random_poly(rng: random.Random, max_degree: int = 2, terms: int = 3) -> LaurentPoly:
    d = max_degree
    return LaurentPoly(
        {(rng.randint(-d, d), rng.randint(-d, d)): random_gaussian(rng) for _ in range(rng.randint(1, terms))}
    )


def random_form(rng: random.Random, k: int, max_degree: int = 2) -> PolyForm:
    return PolyForm({S: random_poly(rng, max_degree) for S in itertools.combinations((1, 2), k)})


def random_vector(rng: random.Random, k: int, max_degree: int = 2) -> PolyVector:
    return PolyVector({S: random_poly(rng, max_degree) for S in itertools.combinations((1, 2), k)})


def random_bivector(rng: random.Random) -> PoissonBivector:
    """A global pi: q supported in {0,1,2}^2, about half the coefficients nonzero."""
    terms = {(a, b): random_gaussian(rng) for a in range(3) for b in range(3) if rng.random() < 0.5}
    return PoissonBivector(LaurentPoly(terms))


def random_cochain(rng: random.Random, t: int, W: int = 3, density: float = 0.03) -> CechCochain:
    basis = cochain_basis(t, W)
    return basis.cochain({k: random_gaussian(rng) for k in range(len(basis)) if rng.random() < density})


# shrinking -----------------------------------------------------------------


def _pieces(obj: Any) -> List[Any]:
    if isinstance(obj, LaurentPoly):
        return [LaurentPoly({e: c}) for e, c in obj.items()]
    if isinstance(obj, PoissonBivector):
        return [PoissonBivector(p) for p in _pieces(obj.q)]
    if isinstance(obj, (PolyForm, PolyVector)):
        cls = type(obj)
        return [cls({S: LaurentPoly({e: c})}) for S, p in obj.components.items() for e, c in p.items()]
    if isinstance(obj, CechCochain):
        return [CechCochain({s: f}) for s, f0 in obj.assignments.items() for f in _pieces(f0)]
    return []


def _join(obj: Any, pieces: Sequence[Any]) -> Any:
    if isinstance(obj, PoissonBivector):
        q = LaurentPoly()
        for p in pieces:
            q = q + p.q
        return PoissonBivector(q)
    acc = type(obj)()
    for p in pieces:
        acc = acc + p
    return acc


def shrink(args: Tuple[Any, ...], fails: Callable[..., bool], budget: int = 400) -> Tuple[Any, ...]:
    """Greedily drop monomials from the arguments while ``fails`` stays true."""
    args = list(args)
    changed = True
    while changed and budget > 0:
        changed = False
        for n, obj in enumerate(args):
            pieces = _pieces(obj)
            k = 0
            while k < len(pieces) and budget > 0:
                trial = pieces[:k] + pieces[k + 1:]
                cand = args[:n] + [_join(obj, trial)] + args[n + 1:]
                budget -= 1
                try:
                    still = fails(*cand)
                except (ValueError, ZeroDivisionError):
                    still = False
                if still:
                    pieces = trial
                    args = cand
                    changed = True
                else:
                    k += 1
    return tuple(args)


# identities ------------------------------------------------------------------


@dataclass
class Identity:
    name: str
    generate: Callable[[random.Random, int], Tuple[Any, ...]]
    holds: Callable[..., bool]
    suite: str


def _gen_pi_form(rng, d):
    return random_bivector(rng), random_form(rng, rng.randint(0, 2), d)


def _gen_pi_two_1forms(rng, d):
    return random_bivector(rng), random_form(rng, 1, d), random_form(rng, 1, d)


def _gen_hamiltonian_vec(rng, d):
    return random_bivector(rng), random_poly(rng, d), random_vector(rng, rng.randint(0, 2), d)


def _gen_hamiltonian_form(rng, d):
    return random_bivector(rng), random_poly(rng, d), random_form(rng, rng.randint(0, 2), d)


def _gen_three_vectors(rng, d):
    return tuple(random_vector(rng, rng.randint(0, 2), d) for _ in range(3))


def _leibniz(pi, a, b):
    # one-forms: delta(a^b) = delta a ^ b + (-1)^1 a ^ delta b + (-1)^1 [a, b]
    lhs = delta_pi(pi, wedge(a, b))
    rhs = wedge(delta_pi(pi, a), b) - wedge(a, delta_pi(pi, b)) - koszul_bracket(pi, a, b)
    return lhs == rhs


def _hamiltonian_vec(pi, f, b):
    Xf = hamiltonian(pi, f)
    return lichnerowicz(pi, b * f) == lichnerowicz(pi, b) * f - vector_wedge(Xf, b)


def _hamiltonian_form(pi, f, mu):
    Xf = hamiltonian(pi, f)
    return delta_pi(pi, mu * f) == delta_pi(pi, mu) * f + interior(Xf, mu)


def _jacobi(P, Q, R):
    p, q, r = (max(V.degree, 0) - 1 for V in (P, Q, R))
    s = schouten
    total = (
        s(P, s(Q, R)) * _sign(p * r)
        + s(Q, s(R, P)) * _sign(q * p)
        + s(R, s(P, Q)) * _sign(r * q)
    )
    return total.is_zero()


def _gen_chain_map(l):
    def gen(rng, d):
        return random_bivector(rng), random_vector(rng, l, d), PolyForm.top(random_poly(rng, d))

    return gen


def _chain_map(l):
    def holds(pi, b, omega):
        # d_pi_nabla returns W with image W (x) dz1^dz2, so tau of it is i_W dz1^dz2
        lhs = tau(d_pi_nabla(pi, b, omega), PolyForm.top())
        return lhs == delta_pi(pi, tau(b, omega)) * _sign(l + 1)

    return holds


def _gen_cech(rng, d):
    t = rng.randint(-2, 2)
    return (random_cochain(rng, t),)


def _gen_pi_cech(rng, d):
    t = rng.randint(-2, 1)
    return random_bivector(rng), random_cochain(rng, t)


def _in_window_shift(pi, c):
    """delta_pi of a cochain inside the box W lands inside the box W + 1."""
    if not c.in_window(3):
        return True
    return delta_pi_cochain(pi, c).in_window(4)


def _gen_window(rng, d):
    s = rng.choice(COVER.simplices)
    S = rng.choice([(), (1,), (2,), (1, 2)])
    e = (rng.randint(-4, 4), rng.randint(-4, 4))
    return (CechCochain({s: PolyForm({S: LaurentPoly({e: 1})})}),)


def _window_vs_regular(c):
    if c.is_zero():
        return True
    ((s, f),) = c.assignments.items()
    ((S, poly),) = f.components.items()
    ((e, _),) = poly.items()
    return form_window(s, S, 100).regular(e) == is_regular_section(s, f)


IDENTITIES: List[Identity] = [
    Identity("delta_pi^2 = 0", _gen_pi_form, lambda pi, a: delta_pi(pi, delta_pi(pi, a)).is_zero(), "operators"),
    Identity("d^2 = 0", _gen_pi_form, lambda pi, a: partial(partial(a)).is_zero(), "operators"),
    Identity(
        "delta_pi d + d delta_pi = 0",
        _gen_pi_form,
        lambda pi, a: (delta_pi(pi, partial(a)) + partial(delta_pi(pi, a))).is_zero(),
        "operators",
    ),
    Identity("Leibniz rule with bracket correction", _gen_pi_two_1forms, _leibniz, "operators"),
    Identity(
        "bracket on 1-forms: expansion = closed form",
        _gen_pi_two_1forms,
        lambda pi, a, b: koszul_bracket(pi, a, b) == koszul_bracket(pi, a, b, method="closed"),
        "operators",
    ),
    Identity(
        "anchor pi# is a bracket morphism",
        _gen_pi_two_1forms,
        lambda pi, a, b: pi_sharp(pi, koszul_bracket(pi, a, b)) == schouten(pi_sharp(pi, a), pi_sharp(pi, b)),
        "operators",
    ),
    Identity("d_pi(f b) = f d_pi b - X_f ^ b", _gen_hamiltonian_vec, _hamiltonian_vec, "operators"),
    Identity("delta_pi(f mu) = f delta_pi mu + i_{X_f} mu", _gen_hamiltonian_form, _hamiltonian_form, "operators"),
    Identity("Schouten graded Jacobi", _gen_three_vectors, _jacobi, "operators"),
    Identity(
        "[pi, pi] = 0",
        lambda rng, d: (random_bivector(rng),),
        lambda pi: schouten(pi.vector, pi.vector).is_zero(),
        "operators",
    ),
]
IDENTITIES += [
    Identity(f"tau d_pi^nabla = (-1)^(l+1) delta_pi tau, l={l}", _gen_chain_map(l), _chain_map(l), "chain-map")
    for l in range(3)
]
IDENTITIES += [
    Identity("Cech d^2 = 0", _gen_cech, lambda c: cech_differential(cech_differential(c)).is_zero(), "cech"),
    Identity("total D^2 = 0", _gen_pi_cech, lambda pi, c: total_differential(pi, total_differential(pi, c)).is_zero(), "cech"),
    Identity("delta_pi window shift", _gen_pi_cech, _in_window_shift, "cech"),
    Identity("window rule = chart regularity", _gen_window, _window_vs_regular, "cech"),
]


@dataclass
class IdentityResult:
    name: str
    suite: str
    trials: int
    passed: int
    counterexample: Optional[Tuple[Any, ...]] = None

    @property
    def ok(self) -> bool:
        return self.passed == self.trials

    def as_dict(self) -> dict:
        out = {"identity": self.name, "suite": self.suite, "trials": self.trials, "passed": self.passed}
        if self.counterexample is not None:
            out["counterexample"] = [str(x) for x in self.counterexample]
        return out


def identities_for(suite: str) -> List[Identity]:
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    return [ident for ident in IDENTITIES if suite == "all" or ident.suite == suite]


def run_identity(ident: Identity, trials: int, rng: random.Random, max_degree: int = 2) -> IdentityResult:
    passed = 0
    for _ in range(trials):
        args = ident.generate(rng, max_degree)
        if ident.holds(*args):
            passed += 1
            continue
        small = shrink(args, lambda *a: not ident.holds(*a))
        return IdentityResult(ident.name, ident.suite, trials, passed, small)
    return IdentityResult(ident.name, ident.suite, trials, passed)


def run_suite(suite: str = "all", trials: int = 200, seed: int = 0, max_degree: int = 2) -> List[IdentityResult]:
    """Run every identity of a suite; each identity gets its own derived seed."""
    results = []
    for ident in identities_for(suite):
        rng = random.Random(f"{seed}:{ident.name}")
        results.append(run_identity(ident, trials, rng, max_degree))
    return results
