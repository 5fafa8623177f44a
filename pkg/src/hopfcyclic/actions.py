"""Hopf actions on algebras, invariant traces, the characteristic map,
cyclic-cocycle checking and the idempotent pairing.

An action of a Hopf algebra H on an algebra A is given by one exact matrix
per H-basis element.  A trace is a coefficient vector.  The characteristic
map gamma sends a degree-n tensor over H to the (n+1)-linear form

    gamma(h^1 ox ... ox h^n)(x^0, ..., x^n) = tau(x^0 h^1(x^1) ... h^n(x^n))

and, when the trace is invariant for the character delta, gamma commutes
with every face, degeneracy and cyclic operator of the two cyclic modules.
"""

from __future__ import annotations

from fractions import Fraction

from .hopf import vec_add, vec_scale, vec_eq
from .reports import CheckReport


class ActionError(Exception):
    pass


class HopfAction:
    """One matrix per H-basis element, acting on the algebra A.

    ``matrices[i]`` is a dict (row, col) -> scalar: the action of basis
    element i of H sends A-basis element ``col`` to the column vector.
    """

    def __init__(self, hopf, algebra, matrices):
        self.hopf = hopf
        self.algebra = algebra
        self.matrices = matrices
        for i in range(hopf.dim):
            if i not in matrices:
                raise ActionError(f"missing action matrix for basis element {i}")

    def act_basis(self, i, a):
        """Action of H-basis element i on A-basis element a."""
        out = {}
        for (r, c), v in self.matrices[i].items():
            if c == a and v:
                out[r] = v
        return out

    def act(self, h, a):
        """Action of an H element (dict) on an A element (dict)."""
        out = {}
        for i, ch in h.items():
            for j, ca in a.items():
                out = vec_add(out, vec_scale(ch * ca, self.act_basis(i, j)))
        return out

    @classmethod
    def trivial(cls, hopf, algebra):
        """h acts by counit: h(a) = eps(h) a."""
        matrices = {}
        for i in range(hopf.dim):
            e = hopf.counit_basis(i)
            matrices[i] = {(r, r): e for r in range(algebra.dim)} if e else {}
        return cls(hopf, algebra, matrices)


class Trace:
    """Linear functional on A given by its values on the basis."""

    def __init__(self, algebra, values, name="trace"):
        if len(values) != algebra.dim:
            raise ActionError("trace vector has the wrong length")
        self.algebra = algebra
        self.values = list(values)
        self.name = name

    def of(self, a):
        total = self.algebra.field.zero()
        for i, c in a.items():
            total = total + c * self.values[i]
        return total

    def is_trace(self):
        """tau(ab) = tau(ba) on all basis pairs; returns (ok, witness)."""
        A = self.algebra
        for i in range(A.dim):
            for j in range(A.dim):
                if self.of(A.mul_basis(i, j)) != self.of(A.mul_basis(j, i)):
                    return False, (i, j)
        return True, None

    def as_cochain(self):
        return {(i,): v for i, v in enumerate(self.values) if v}


def check_action(hopf, algebra, action):
    """Unit action, module axiom and multiplicativity of the action."""
    report = CheckReport("hopf-action",
                         meta={"hopf": hopf.name, "algebra": algebra.name})
    unit_ok, witness = True, None
    one_h = hopf.unit_element()
    for a in range(algebra.dim):
        basis_a = {a: algebra.field.one()}
        if not vec_eq(action.act(one_h, basis_a), basis_a):
            unit_ok, witness = False, a
            break
    report.add("unit-acts-as-identity", unit_ok, witness)

    mod_ok, witness = True, None
    for i in range(hopf.dim):
        for j in range(hopf.dim):
            prod = hopf.mul_basis(i, j)
            for a in range(algebra.dim):
                lhs = action.act({i: hopf.field.one()}, action.act_basis(j, a))
                rhs = action.act(prod, {a: algebra.field.one()})
                if not vec_eq(lhs, rhs):
                    mod_ok, witness = False, (i, j, a)
                    break
            if not mod_ok:
                break
        if not mod_ok:
            break
    report.add("module-axiom", mod_ok, witness)

    mult_ok, witness = True, None
    for i in range(hopf.dim):
        comul = hopf.comul_basis(i)
        for a in range(algebra.dim):
            for b in range(algebra.dim):
                lhs = action.act({i: hopf.field.one()}, algebra.mul_basis(a, b))
                rhs = {}
                for (j, k), c in comul.items():
                    piece = algebra.mul(action.act_basis(j, a),
                                        action.act_basis(k, b))
                    rhs = vec_add(rhs, vec_scale(c, piece))
                if not vec_eq(lhs, rhs):
                    mult_ok, witness = False, (i, a, b)
                    break
            if not mult_ok:
                break
        if not mult_ok:
            break
    report.add("action-multiplicative", mult_ok, witness)

    unit_a_ok, witness = True, None
    one_a = algebra.unit_element()
    for i in range(hopf.dim):
        lhs = action.act({i: hopf.field.one()}, one_a)
        rhs = vec_scale(hopf.counit_basis(i), one_a)
        if not vec_eq(lhs, rhs):
            unit_a_ok, witness = False, i
            break
    report.add("acts-on-unit-by-counit", unit_a_ok, witness)
    return report


def check_delta_invariance(hopf, delta, algebra, action, trace):
    """tau(h(a) b) = tau(a S~(h)(b)) on all basis triples."""
    report = CheckReport("trace-invariance",
                         meta={"hopf": hopf.name, "algebra": algebra.name,
                               "character": delta.name, "trace": trace.name})
    ok, witness = trace.is_trace()
    report.add("trace-property", ok, witness)
    inv_ok, witness = True, None
    one = hopf.field.one()
    for i in range(hopf.dim):
        twisted = hopf.twisted_antipode(delta, {i: one})
        for a in range(algebra.dim):
            ha = action.act_basis(i, a)
            for b in range(algebra.dim):
                basis_b = {b: one}
                lhs = trace.of(algebra.mul(ha, basis_b))
                rhs = trace.of(algebra.mul({a: one},
                                           action.act(twisted, basis_b)))
                if lhs != rhs:
                    inv_ok, witness = False, (i, a, b)
                    break
            if not inv_ok:
                break
        if not inv_ok:
            break
    report.add("integration-by-parts", inv_ok, witness)
    return report


def characteristic_map(hopf, algebra, action, trace, t, n):
    """The cochain tau(x^0 h^1(x^1) ... h^n(x^n)) as a coefficient dict
    over (n+1)-tuples of A-basis indices.  Degree 0 recovers the trace."""
    one = algebra.field.one()
    out = {}
    import itertools
    for xs in itertools.product(range(algebra.dim), repeat=n + 1):
        total = algebra.field.zero()
        for key, c in t.items():
            prod = {xs[0]: one}
            for slot in range(n):
                prod = algebra.mul(prod,
                                   action.act_basis(key[slot], xs[slot + 1]))
            total = total + c * trace.of(prod)
        if total:
            out[xs] = total
    return out


def check_gamma_morphism(hopf, delta, algebra, action, trace, N_max):
    """gamma intertwines every face, degeneracy and cyclic operator up to
    degree N_max, checked on all basis tensors of the Hopf side."""
    from .cyclic_ops import HopfCyclicModule, CochainCyclicModule
    hside = HopfCyclicModule(hopf, delta)
    aside = CochainCyclicModule(algebra)
    report = CheckReport("characteristic-map",
                         meta={"hopf": hopf.name, "algebra": algebra.name,
                               "character": delta.name, "trace": trace.name,
                               "max-degree": N_max})

    def gamma(t, n):
        return characteristic_map(hopf, algebra, action, trace, t, n)

    def compare(name, op_h, op_a, src_deg, tgt_deg):
        for t in hside.samples(src_deg):
            lhs = gamma(op_h(t), tgt_deg)
            rhs = op_a(gamma(t, src_deg))
            if not vec_eq(lhs, rhs):
                report.add(name, False, sorted(t))
                return
        report.add(name, True, None)

    for n in range(1, N_max + 1):
        for i in range(n + 1):
            compare(f"face i={i} n={n}",
                    lambda t, i=i, n=n: hside.face(i, n, t),
                    lambda p, i=i, n=n: aside.face(i, n, p),
                    n - 1, n)
    for n in range(N_max):
        for i in range(n + 1):
            compare(f"degeneracy i={i} n={n}",
                    lambda t, i=i, n=n: hside.degeneracy(i, n, t),
                    lambda p, i=i, n=n: aside.degeneracy(i, n, p),
                    n + 1, n)
    for n in range(1, N_max + 1):
        compare(f"cyclic n={n}",
                lambda t, n=n: hside.cyclic(n, t),
                lambda p, n=n: aside.cyclic(n, p),
                n, n)
    return report


# ---------------------------------------------------------------------------
# cyclic cocycles on the algebra side


def cochain_from_function(algebra, n, fn):
    """Coefficient dict of the (n+1)-linear form fn on basis tuples."""
    import itertools
    out = {}
    for key in itertools.product(range(algebra.dim), repeat=n + 1):
        v = fn(*key)
        if v:
            out[key] = v
    return out


def check_cyclic_cocycle(algebra, phi, n=None):
    """lambda phi = phi and b phi = 0; for degree 2 the two conditions are
    the cyclicity of the trilinear form and the four-term identity."""
    from .cyclic_ops import CochainCyclicModule
    from .cohomology import hochschild_b, signed_cyclic
    if n is None:
        n = len(next(iter(phi))) - 1 if phi else 0
    cmod = CochainCyclicModule(algebra)
    report = CheckReport("cyclic-cocycle",
                         meta={"algebra": algebra.name, "degree": n})
    lam = signed_cyclic(cmod, n, phi)
    cyc_ok = vec_eq(lam, phi)
    diff = vec_add(lam, vec_scale(-1, phi))
    report.add("cyclicity", cyc_ok,
               None if cyc_ok else sorted(diff)[0])
    bphi = hochschild_b(cmod, n + 1, phi)
    b_ok = not bphi
    report.add("hochschild-cocycle", b_ok,
               None if b_ok else sorted(bphi)[0])
    return report


# ---------------------------------------------------------------------------
# matrices over A and the idempotent pairing


def mat_over_mul(algebra, X, Y, q):
    out = {}
    for (r, k1), x in X.items():
        for (k2, c), y in Y.items():
            if k1 != k2:
                continue
            prod = algebra.mul(x, y)
            if prod:
                out[(r, c)] = vec_add(out.get((r, c), {}), prod)
    return {k: v for k, v in out.items() if v}


def mat_over_identity(algebra, q):
    return {(i, i): algebra.unit_element() for i in range(q)}


def mat_over_eq(X, Y):
    keys = set(X) | set(Y)
    return all(vec_eq(X.get(k, {}), Y.get(k, {})) for k in keys)


def is_idempotent(algebra, E, q):
    return mat_over_eq(mat_over_mul(algebra, E, E, q), E)


def eval_cochain(algebra, phi, elems):
    """Evaluate a coefficient-dict cochain on a tuple of A elements."""
    total = algebra.field.zero()
    for key, c in phi.items():
        prod = c
        for slot, k in enumerate(key):
            prod = prod * elems[slot].get(k, algebra.field.zero())
        total = total + prod
    return total


def pair_idempotent(algebra, phi, E, q):
    """<E, phi> for an even cochain phi.  Degree 0 is the trace extension
    sum_i phi(E_ii); degree 2 is sum_{i,j,k} phi(E_ij, E_jk, E_ki)."""
    if not is_idempotent(algebra, E, q):
        raise ActionError("matrix is not idempotent")
    degree = len(next(iter(phi))) - 1 if phi else 0
    if degree == 0:
        total = algebra.field.zero()
        for i in range(q):
            total = total + eval_cochain(algebra, phi, (E.get((i, i), {}),))
        return total
    if degree == 2:
        total = algebra.field.zero()
        for i in range(q):
            for j in range(q):
                for k in range(q):
                    total = total + eval_cochain(
                        algebra, phi,
                        (E.get((i, j), {}), E.get((j, k), {}),
                         E.get((k, i), {})))
        return total
    raise ActionError(f"pairing implemented for degrees 0 and 2, not {degree}")


def random_conjugate(algebra, E, q, rng, steps=3):
    """Conjugate E by a product of elementary matrices I + a e_rs (r != s),
    whose inverses are I - a e_rs, so invertibility is exact by design."""
    out = E
    for _ in range(steps):
        r = rng.randrange(q)
        s = rng.randrange(q)
        while s == r:
            s = rng.randrange(q)
        a = {rng.randrange(algebra.dim):
             algebra.field.parse(str(Fraction(rng.randrange(-3, 4) or 1)))}
        u = mat_over_identity(algebra, q)
        u[(r, s)] = vec_add(u.get((r, s), {}), a)
        uinv = mat_over_identity(algebra, q)
        uinv[(r, s)] = vec_add(uinv.get((r, s), {}), vec_scale(-1, a))
        out = mat_over_mul(algebra, mat_over_mul(algebra, u, out, q), uinv, q)
    return out


# ---------------------------------------------------------------------------
# the translation example


def translation_action(labels, table):
    """Group algebra of G acting on functions on G by right translation of
    the argument: (g . f)(s) = f(s g).  Returns (H, A, action)."""
    from .hopf import group_algebra, function_algebra
    from .algebras import algebra_of_hopf
    H = group_algebra(labels, table)
    A = algebra_of_hopf(function_algebra(labels, table))
    n = len(labels)
    inv = {}
    for g in range(n):
        for h in range(n):
            if table[g][h] == 0:
                inv[g] = h
    one = H.field.one()
    matrices = {}
    for g in range(n):
        # g sends the indicator of the point t to the indicator of t g^{-1}
        matrices[g] = {(table[t][inv[g]], t): one for t in range(n)}
    return H, A, HopfAction(H, A, matrices)


def summation_trace(algebra):
    """Sum of the values of a function; invariant under translation."""
    one = algebra.field.one()
    return Trace(algebra, [one] * algebra.dim, name="summation")


def point_trace(algebra, point):
    """Evaluation at one point; a trace (A commutative) but not invariant."""
    zero = algebra.field.zero()
    values = [zero] * algebra.dim
    values[point] = algebra.field.one()
    return Trace(algebra, values, name=f"eval@{point}")
