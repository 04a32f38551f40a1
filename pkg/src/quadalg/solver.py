"""Projective eigenvector systems and their solution engines.

For an n-dimensional algebra the eigenvector condition x*x = lam*x becomes
n homogeneous quadratic forms in the n+1 projective unknowns
(xi_1, ..., xi_n, lam):

    g_j = sum_ik alpha[i][k][j] xi_i xi_k  -  lam xi_j   (optionally
          minus eps_j * phi_j(x)^2 for a perturbed system)

The point (0 : ... : 0 : 1) always solves the unperturbed and perturbed
system and is called trivial; every nontrivial solution yields an
eigenvector.  Engines:

* ``solve_exhaustive``        -- sweep of P^n over a finite field (the oracle
                                 engine; switches to a vectorized index
                                 backend above a size threshold)
* ``solve_exact_dim2``        -- exact rational engine for n = 2 via the
                                 proportionality cubic
* ``solve_real``              -- multistart damped Newton over the reals
* ``count_solutions_extension`` / ``genericity_probe`` -- distinct-point
                                 counts over extension fields F_{p^k} and the
                                 bounded-count heuristic built on them

Every returned solution is re-verified through an evaluation route
independent of the engine that produced it.
"""

import itertools
from dataclasses import dataclass
from enum import Enum

import numpy as np

from . import ffenum
from .algebra import StructureTensor, eigencheck
from .errors import (
    BudgetExceeded,
    DimensionMismatch,
    SearchExhausted,
    UnsupportedField,
    ValuationViolation,
    WrongDimension,
)
from .fields import (
    LaurentSeries,
    Polynomial,
    PrimeField,
    Rationals,
    Reals,
    finite_field,
    polynomial_roots,
)

# above this many projective points the index backend takes over
FAST_PATH_THRESHOLD = 4096


@dataclass(frozen=True)
class SolveConfig:
    """Tunables shared by the engines; a fixed seed makes runs deterministic."""

    residual_tol: float = 1e-9
    max_restarts: int = 200
    max_newton_iter: int = 100
    k_max: int = 4
    seed: int = 0
    enumeration_budget: int = 10_000_000

    def __post_init__(self):
        if (
            self.residual_tol <= 0
            or self.max_restarts <= 0
            or self.max_newton_iter <= 0
            or self.k_max <= 0
            or self.enumeration_budget <= 0
        ):
            raise ValueError("config values must be positive")


@dataclass(frozen=True)
class ProjectiveSolution:
    """A normalized point (xi_1 : ... : xi_n : lam) annihilating the system.

    Exact fields: leftmost nonzero coordinate is 1.  Reals: scaled so the
    largest absolute coordinate is 1 (and positive); `residual` is the
    eigen-residual at the unit-norm representative of x.
    """

    coords: tuple
    trivial: bool
    residual: float = 0.0
    normalized: bool = True

    @property
    def lam(self):
        return self.coords[-1]


def normalize_point(F, coords):
    """Canonical projective representative (see ProjectiveSolution)."""
    coords = tuple(coords)
    if F.is_exact:
        pivot = next((i for i, c in enumerate(coords) if not F.is_zero(c)), None)
        if pivot is None:
            raise ValueError("cannot normalize the zero point")
        c = F.inv(coords[pivot])
    else:
        pivot = max(range(len(coords)), key=lambda i: abs(coords[i]))
        if F.is_zero(coords[pivot]):
            raise ValueError("cannot normalize the zero point")
        c = 1.0 / coords[pivot]
    return tuple(F.mul(c, x) for x in coords)


class QuadraticSystem:
    """The n forms g_j as sparse quadratic monomial maps over n+1 variables.

    ``forms[j]`` maps a variable pair (i, k), i <= k, to its coefficient;
    variable n is lam.  The source tensor is kept so solutions can be
    re-verified through the squaring map, independently of this expansion.
    """

    __slots__ = ("field", "n", "forms", "tensor", "perturbation")

    def __init__(self, field, n, forms, tensor=None, perturbation=None):
        self.field = field
        self.n = n
        self.forms = tuple(dict(f) for f in forms)
        self.tensor = tensor
        self.perturbation = perturbation

    def evaluate(self, point):
        """Values (g_1, ..., g_n) at a projective point of length n+1."""
        if len(point) != self.n + 1:
            raise DimensionMismatch(f"expected {self.n + 1} coordinates")
        F = self.field
        out = []
        for form in self.forms:
            acc = F.zero()
            for (i, k), c in form.items():
                acc = F.add(acc, F.mul(c, F.mul(point[i], point[k])))
            out.append(acc)
        return tuple(out)

    def residual_via_tensor(self, point):
        """Same values computed from the structure tensor (independent route)."""
        if self.tensor is None:
            raise ValueError("system carries no source tensor")
        F = self.field
        x, lam = point[: self.n], point[self.n]
        v = self.tensor.square(x)
        out = [F.sub(v[j], F.mul(lam, x[j])) for j in range(self.n)]
        if self.perturbation is not None:
            for j, (eps, phi) in enumerate(self.perturbation):
                lin = F.zero()
                for i in range(self.n):
                    lin = F.add(lin, F.mul(phi[i], x[i]))
                out[j] = F.sub(out[j], F.mul(eps, F.mul(lin, lin)))
        return tuple(out)

    def is_solution(self, point):
        F = self.field
        return all(F.is_zero(v) for v in self.evaluate(point))


def build_system(A):
    """The eigenvector system of an algebra, with the trivial solution built in."""
    F = A.field
    n = A.dim
    forms = []
    for j in range(n):
        form = {}
        for i in range(n):
            for k in range(n):
                c = A.alpha[i][k][j]
                if F.is_zero(c):
                    continue
                key = (min(i, k), max(i, k))
                form[key] = F.add(form.get(key, F.zero()), c)
        key = (j, n)
        form[key] = F.add(form.get(key, F.zero()), F.neg(F.one()))
        forms.append({k: v for k, v in form.items() if not F.is_zero(v)})
    return QuadraticSystem(F, n, forms, tensor=A)


def perturb_system(S, eps, phis):
    """Forms g_j - eps_j * phi_j(x)^2; degree and the trivial solution survive.

    Over a Laurent-series field each eps_j must sit in the maximal ideal
    (valuation offset >= 1) and each phi_j coefficient in the valuation ring.
    """
    F = S.field
    n = S.n
    if len(eps) != n or len(phis) != n:
        raise DimensionMismatch("need one eps and one phi per form")
    if isinstance(F, LaurentSeries):
        for e in eps:
            if e[1] and e[0] < 1:
                raise ValuationViolation(f"eps has valuation offset {e[0]} < 1")
        for phi in phis:
            for c in phi:
                if c[1] and c[0] < 0:
                    raise ValuationViolation("phi coefficient has a pole")
    two = F.from_int(2)
    forms = []
    for j in range(n):
        form = dict(S.forms[j])
        e = eps[j]
        phi = tuple(phis[j])
        if len(phi) != n:
            raise DimensionMismatch("phi must have one coefficient per xi variable")
        if not F.is_zero(e):
            for i in range(n):
                for k in range(i, n):
                    c = F.mul(e, F.mul(phi[i], phi[k]))
                    if i != k:
                        c = F.mul(two, c)
                    if F.is_zero(c):
                        continue
                    key = (i, k)
                    form[key] = F.sub(form.get(key, F.zero()), c)
        forms.append({k: v for k, v in form.items() if not F.is_zero(v)})
    pert = tuple((eps[j], tuple(phis[j])) for j in range(n))
    return QuadraticSystem(F, n, forms, tensor=S.tensor, perturbation=pert)


def affine_jacobian_at_origin(S):
    """Jacobian of f_j(x) = g_j(x, 1) at x = 0, computed by differentiating the forms."""
    F = S.field
    n = S.n
    point = [F.zero()] * n + [F.one()]
    jac = [[F.zero()] * n for _ in range(n)]
    for j, form in enumerate(S.forms):
        for (a, b), c in form.items():
            for i in range(n):
                term = F.zero()
                if a == i:
                    term = F.add(term, point[b])
                if b == i:
                    term = F.add(term, point[a])
                if not F.is_zero(term):
                    jac[j][i] = F.add(jac[j][i], F.mul(c, term))
    return jac


def trivial_jacobian_check(S):
    """True iff the affine Jacobian at the origin is minus the identity.

    This holds analytically for every system built here (the only linear part
    of f_j is -xi_j, and perturbations vanish to second order), so the check
    validates the implementation rather than the mathematics.
    """
    F = S.field
    jac = affine_jacobian_at_origin(S)
    mone = F.neg(F.one())
    for j in range(S.n):
        for i in range(S.n):
            want = mone if i == j else F.zero()
            if not F.eq(jac[j][i], want):
                return False
    return True


# ---------------------------------------------------------------------------
# Exhaustive engine over finite fields
# ---------------------------------------------------------------------------


def projective_points(F, n):
    """Canonical representatives of P^n(F): leftmost nonzero coordinate is 1."""
    elems = list(F.elements())
    one, zero = F.one(), F.zero()
    for lead in range(n + 1):
        prefix = (zero,) * lead + (one,)
        for tail in itertools.product(elems, repeat=n - lead):
            yield prefix + tail


def projective_point_count(q, n):
    return (q ** (n + 1) - 1) // (q - 1)


def _verify_solutions(S, sols):
    F = S.field
    for pt in sols:
        vals = S.residual_via_tensor(pt) if S.tensor is not None else S.evaluate(pt)
        if not all(F.is_zero(v) for v in vals):
            raise RuntimeError(f"engine returned a non-solution {pt!r}")


def solve_exhaustive(S, cfg=None):
    """All projective solutions over a finite field, complete and duplicate-free."""
    cfg = cfg if cfg is not None else SolveConfig()
    F = S.field
    if not F.finite:
        raise UnsupportedField("exhaustive enumeration needs a finite field")
    q = F.order
    total = projective_point_count(q, S.n)
    if total > cfg.enumeration_budget:
        raise BudgetExceeded(f"{total} projective points exceed budget {cfg.enumeration_budget}")
    sols = None
    if total > FAST_PATH_THRESHOLD and ffenum.supports(F):
        forms_idx = [
            {key: F.scalar_index(c) for key, c in form.items()} for form in S.forms
        ]
        rows = ffenum.solve_system(F, S.n, forms_idx)
        sols = [tuple(F.scalar_from_index(i) for i in row) for row in rows]
    if sols is None:
        sols = [pt for pt in projective_points(F, S.n) if S.is_solution(pt)]
    _verify_solutions(S, sols)
    zero = F.zero()
    return [
        ProjectiveSolution(pt, trivial=all(F.eq(c, zero) for c in pt[: S.n]))
        for pt in sols
    ]


# ---------------------------------------------------------------------------
# Exact rational engine, dimension 2
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Dim2Result:
    """Rational eigen-directions of a 2-dimensional rational algebra.

    When the proportionality cubic vanishes identically every direction is an
    eigen-direction; `infinite_family` is set and `solutions` holds sample
    directions (the coordinate axes, the diagonal, and the kernel of the
    eigenvalue form) rather than an exhaustive list.
    """

    solutions: tuple
    infinite_family: bool


def solve_exact_dim2(A):
    """All rational eigen-directions of a 2-dimensional rational algebra.

    Eliminates lam through the cubic c(a, b) = (Vx)_1 b - (Vx)_2 a, whose
    projective rational roots are exactly the eigen-directions; each root's
    eigenvalue is recovered by coordinate division.  The trivial projective
    solution is not listed.
    """
    F = A.field
    if not isinstance(F, Rationals):
        raise UnsupportedField("exact dim-2 engine works over the rationals")
    if A.dim != 2:
        raise WrongDimension(f"exact dim-2 engine got dim {A.dim}")
    al = A.alpha
    q1 = (al[0][0][0], F.add(al[0][1][0], al[1][0][0]), al[1][1][0])
    q2 = (al[0][0][1], F.add(al[0][1][1], al[1][0][1]), al[1][1][1])
    # c(a,b) = q1(a,b)*b - q2(a,b)*a, coefficients of a^3, a^2 b, a b^2, b^3
    c3 = F.neg(q2[0])
    c2 = F.sub(q1[0], q2[1])
    c1 = F.sub(q1[1], q2[2])
    c0 = q1[2]
    one, zero = F.one(), F.zero()
    if all(F.is_zero(c) for c in (c0, c1, c2, c3)):
        dirs = [(one, zero), (zero, one), (one, one)]
        u = A.square((one, zero))[0]
        v = A.square((zero, one))[1]
        if not (F.is_zero(u) and F.is_zero(v)):
            kernel = normalize_point(F, (F.neg(v), u))
            if kernel not in dirs:
                dirs.append(kernel)
        sols = tuple(
            ProjectiveSolution(d + (eigencheck(A, d),), trivial=False) for d in dirs
        )
        return Dim2Result(sols, infinite_family=True)
    dirs = []
    if F.is_zero(c3):
        dirs.append((one, zero))
    for r in polynomial_roots(Polynomial(F, [c0, c1, c2, c3], var="u")):
        dirs.append(normalize_point(F, (r, one)))
    sols = []
    for d in dirs:
        lam = eigencheck(A, d)
        if lam is None:
            raise RuntimeError(f"cubic root {d!r} is not an eigen-direction (engine bug)")
        sols.append(ProjectiveSolution(d + (lam,), trivial=False))
    return Dim2Result(tuple(sols), infinite_family=False)


# ---------------------------------------------------------------------------
# Real engine
# ---------------------------------------------------------------------------


def _sym_array(A):
    T = np.array(A.alpha, dtype=float)
    return 0.5 * (T + T.transpose(1, 0, 2))


def _v_of(S, x):
    return np.einsum("ikj,i,k->j", S, x, x)


def _jac_v(S, x):
    # d(Vx)_j / dx_i = 2 * sum_k S[i,k,j] x_k
    return 2.0 * np.einsum("ikj,k->ji", S, x)


def solve_real(A, cfg=None):
    """One eigenpair of a real algebra by multistart damped Newton.

    Works on the augmented system (Vx - lam*x = 0, |x|^2 = 1) with
    lam seeded as <Vx, x>; restarts are independent and deterministic for a
    fixed seed.  A real eigenvector always exists for finite-dimensional real
    algebras, so exhausting the restarts signals a bug, not a math outcome.
    """
    cfg = cfg if cfg is not None else SolveConfig()
    F = A.field
    if not isinstance(F, Reals):
        raise UnsupportedField("the real engine needs a Reals algebra")
    n = A.dim
    S = _sym_array(A)

    def aug_residual(z):
        x, lam = z[:n], z[n]
        return np.concatenate([_v_of(S, x) - lam * x, [x @ x - 1.0]])

    def aug_jacobian(z):
        x, lam = z[:n], z[n]
        J = np.zeros((n + 1, n + 1))
        J[:n, :n] = _jac_v(S, x) - lam * np.eye(n)
        J[:n, n] = -x
        J[n, :n] = 2.0 * x
        return J

    rng = np.random.default_rng(cfg.seed)
    for _ in range(cfg.max_restarts):
        x = rng.normal(size=n)
        x /= np.linalg.norm(x)
        z = np.concatenate([x, [x @ _v_of(S, x)]])
        for _ in range(cfg.max_newton_iter):
            xn = z[:n]
            nrm = np.linalg.norm(xn)
            if nrm > 1e-12:
                xu = xn / nrm
                lam_u = xu @ _v_of(S, xu)
                res = np.linalg.norm(_v_of(S, xu) - lam_u * xu)
                if res <= cfg.residual_tol:
                    return _real_solution(F, n, xu, lam_u, res)
            H = aug_residual(z)
            try:
                delta = np.linalg.solve(aug_jacobian(z), -H)
            except np.linalg.LinAlgError:
                break
            base = np.linalg.norm(H)
            t = 1.0
            while t > 1e-12:
                z_new = z + t * delta
                if np.linalg.norm(aug_residual(z_new)) < (1.0 - 1e-4 * t) * base:
                    break
                t *= 0.5
            if t <= 1e-12:
                break
            z = z_new
            if not np.all(np.isfinite(z)):
                break
    raise SearchExhausted(
        f"no eigenpair within {cfg.max_restarts} restarts (residual_tol={cfg.residual_tol})"
    )


def _real_solution(F, n, xu, lam_u, res):
    coords = np.concatenate([xu, [lam_u]])
    pivot = int(np.argmax(np.abs(coords)))
    coords = coords / coords[pivot]
    return ProjectiveSolution(
        tuple(float(c) for c in coords), trivial=False, residual=float(res)
    )


def unit_eigenpair(A, sol):
    """Recover the unit-norm eigenpair (x, lam) from a projective real solution."""
    n = A.dim
    x = np.array(sol.coords[:n], dtype=float)
    s = np.linalg.norm(x)
    if s == 0:
        raise ValueError("trivial solution has no eigenvector")
    return x / s, sol.coords[n] / s


def _newton_multistart(n, residual, jacobian, rng, cfg, accept):
    """Shared damped-Newton loop over random starts; returns an accepted x or None."""
    for _ in range(cfg.max_restarts):
        x = rng.normal(size=n)
        x /= np.linalg.norm(x)
        for _ in range(cfg.max_newton_iter):
            out = accept(x)
            if out is not None:
                return out
            H = residual(x)
            J = jacobian(x)
            try:
                if J.shape[0] == J.shape[1]:
                    delta = np.linalg.solve(J, -H)
                else:
                    delta = np.linalg.lstsq(J, -H, rcond=None)[0]
            except np.linalg.LinAlgError:
                break
            base = np.linalg.norm(H)
            t = 1.0
            while t > 1e-12:
                if np.linalg.norm(residual(x + t * delta)) < (1.0 - 1e-4 * t) * base:
                    break
                t *= 0.5
            if t <= 1e-12:
                break
            x = x + t * delta
            if not np.all(np.isfinite(x)):
                break
    return None


def find_idempotent_real(A, cfg=None):
    """Search for x with x*x = x; returns the element or None (not a nonexistence proof)."""
    cfg = cfg if cfg is not None else SolveConfig()
    S = _sym_array(A)
    n = A.dim

    def accept(x):
        # idempotents are bounded away from 0, so tiny iterates are drift to
        # the trivial root of Vx - x
        if np.linalg.norm(x) < 1e-3:
            return None
        if np.linalg.norm(_v_of(S, x) - x) <= cfg.residual_tol:
            return tuple(float(c) for c in x)
        return None

    rng = np.random.default_rng(cfg.seed + 1)
    return _newton_multistart(
        n,
        lambda x: _v_of(S, x) - x,
        lambda x: _jac_v(S, x) - np.eye(n),
        rng,
        cfg,
        accept,
    )


def find_absolute_nilpotent_real(A, cfg=None):
    """Search for unit x with x*x = 0; returns the element or None."""
    cfg = cfg if cfg is not None else SolveConfig()
    S = _sym_array(A)
    n = A.dim

    def residual(x):
        return np.concatenate([_v_of(S, x), [x @ x - 1.0]])

    def jacobian(x):
        J = np.zeros((n + 1, n))
        J[:n] = _jac_v(S, x)
        J[n] = 2.0 * x
        return J

    def accept(x):
        nrm = np.linalg.norm(x)
        if nrm < 1e-6:
            return None
        xu = x / nrm
        if np.linalg.norm(_v_of(S, xu)) <= cfg.residual_tol:
            return tuple(float(c) for c in xu)
        return None

    rng = np.random.default_rng(cfg.seed + 2)
    return _newton_multistart(n, residual, jacobian, rng, cfg, accept)


# ---------------------------------------------------------------------------
# Extension counting and the genericity probe
# ---------------------------------------------------------------------------


def _as_system(A_or_S):
    if isinstance(A_or_S, StructureTensor):
        return build_system(A_or_S)
    if isinstance(A_or_S, QuadraticSystem):
        return A_or_S
    raise TypeError("expected a StructureTensor or QuadraticSystem")


def _embed_system(S, target):
    """Re-read a prime-field system through the embedding into an extension."""
    emb = target.embed
    forms = [{key: emb(c) for key, c in form.items()} for form in S.forms]
    tensor = None
    if S.tensor is not None:
        alpha = [
            [[emb(a) for a in row] for row in plane] for plane in S.tensor.alpha
        ]
        tensor = StructureTensor(target, alpha, max_dim=S.n)
    pert = None
    if S.perturbation is not None:
        pert = tuple(
            (emb(eps), tuple(emb(c) for c in phi)) for eps, phi in S.perturbation
        )
    return QuadraticSystem(target, S.n, forms, tensor=tensor, perturbation=pert)


def count_solutions_extension(A_or_S, k, cfg=None):
    """Distinct projective solutions over F_{p^k} (multiplicities not counted)."""
    cfg = cfg if cfg is not None else SolveConfig()
    S = _as_system(A_or_S)
    F = S.field
    if not isinstance(F, PrimeField):
        raise UnsupportedField("extension counting needs a prime base field")
    if k < 1:
        raise ValueError("extension degree must be >= 1")
    if k == 1:
        return len(solve_exhaustive(S, cfg))
    target = finite_field(F.p**k)
    return len(solve_exhaustive(_embed_system(S, target), cfg))


class GenericityVerdict(Enum):
    LIKELY_GENERIC = "LikelyGeneric"
    LIKELY_POSITIVE_DIMENSIONAL = "LikelyPositiveDimensional"


@dataclass(frozen=True)
class ProbeReport:
    p: int
    counts: dict
    verdict: GenericityVerdict
    bound: int


def genericity_probe(A_or_S, cfg=None):
    """Counts over F_{p^k}, k = 1..k_max, against the Bezout bound 2^n.

    A count above 2^n anywhere indicates a positive-dimensional solution set;
    counts bounded by 2^n throughout are consistent with finitely many
    solutions over the closure.  Verdicts are heuristic, hence "Likely".
    """
    cfg = cfg if cfg is not None else SolveConfig()
    S = _as_system(A_or_S)
    F = S.field
    if not isinstance(F, PrimeField):
        raise UnsupportedField("the genericity probe needs a prime base field")
    bound = 2**S.n
    counts = {}
    verdict = GenericityVerdict.LIKELY_GENERIC
    for k in range(1, cfg.k_max + 1):
        counts[k] = count_solutions_extension(S, k, cfg)
        if counts[k] > bound:
            verdict = GenericityVerdict.LIKELY_POSITIVE_DIMENSIONAL
    return ProbeReport(F.p, counts, verdict, bound)


def draw_perturbation(F, n, rng):
    """Random (eps, phis) for perturb_system, honoring valuation constraints."""
    if isinstance(F, LaurentSeries):
        eps = [
            F.series(rng.randint(1, 2), [F.base.random(rng) for _ in range(2)])
            for _ in range(n)
        ]
        phis = [
            tuple(
                F.series(rng.randint(0, 1), [F.base.random(rng)]) for _ in range(n)
            )
            for _ in range(n)
        ]
        return eps, phis
    eps = [F.random(rng) for _ in range(n)]
    phis = [tuple(F.random(rng) for _ in range(n)) for _ in range(n)]
    return eps, phis
