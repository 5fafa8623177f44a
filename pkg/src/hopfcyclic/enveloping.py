"""Universal enveloping algebras U(g) in the Poincare-Birkhoff-Witt basis.

Elements are finite linear combinations of ordered monomials
X_1^{a_1} ... X_n^{a_n}, keyed by their exponent vectors.  Products are
straightened recursively: swapping an out-of-order pair X_j X_i (j > i)
via the bracket never raises total degree and strictly lowers the number
of inversions at fixed degree, so rewriting terminates.

Generators are primitive, which fixes the coproduct, counit and antipode.
The canonical character is the trace of the adjoint representation.
"""

from __future__ import annotations

from fractions import Fraction

from .fields import RationalField
from .hopf import vec_add, vec_scale, vec_eq

ZERO = Fraction(0)
ONE = Fraction(1)
_RATIONAL = RationalField()


class LieAlgebra:
    """Lie algebra by structure constants: [X_i, X_j] = sum_k c^k_ij X_k.

    Antisymmetry and the Jacobi identity are checked at construction.
    """

    def __init__(self, dim, brackets, name=None):
        self.dim = dim
        self.name = name or f"lie-{dim}"
        self.brackets = {}  # (i, j) -> {k: c}, stored for all i != j
        table = {}
        for (i, j), comb in brackets.items():
            comb = {k: Fraction(v) for k, v in comb.items() if v}
            if i == j and comb:
                raise ValueError(f"[X{i},X{i}] must vanish")
            table[(i, j)] = comb
        for i in range(dim):
            for j in range(dim):
                if i == j:
                    continue
                if (i, j) in table and (j, i) in table and not vec_eq(
                        table[(i, j)], vec_scale(-1, table[(j, i)])):
                    raise ValueError(f"brackets not antisymmetric at ({i},{j})")
                if (i, j) in table:
                    self.brackets[(i, j)] = table[(i, j)]
                else:
                    self.brackets[(i, j)] = vec_scale(-1, table.get((j, i), {}))
        self._check_jacobi()

    def bracket(self, i, j):
        if i == j:
            return {}
        return self.brackets.get((i, j), {})

    def _bracket_elem(self, a, b):
        """[a, b] for elements given as sparse generator combinations."""
        out = {}
        for i, ca in a.items():
            for j, cb in b.items():
                out = vec_add(out, vec_scale(ca * cb, self.bracket(i, j)))
        return out

    def _check_jacobi(self):
        for i in range(self.dim):
            for j in range(self.dim):
                for k in range(self.dim):
                    total = self._bracket_elem(self.bracket(i, j), {k: ONE})
                    total = vec_add(total, self._bracket_elem(
                        self.bracket(j, k), {i: ONE}))
                    total = vec_add(total, self._bracket_elem(
                        self.bracket(k, i), {j: ONE}))
                    if total:
                        raise ValueError(
                            f"Jacobi identity fails at ({i},{j},{k})")

    def adjoint_trace_character(self):
        """delta(X_i) = trace(ad X_i) = sum_j c^j_ij, as generator values."""
        values = []
        for i in range(self.dim):
            t = ZERO
            for j in range(self.dim):
                t += self.bracket(i, j).get(j, ZERO)
            values.append(t)
        return values


def abelian_lie_algebra(dim):
    return LieAlgebra(dim, {}, name=f"abelian-{dim}")


def ax_plus_b_lie_algebra():
    """Two generators with [X, Y] = Y."""
    return LieAlgebra(2, {(0, 1): {1: ONE}}, name="ax+b")


class SymbolicCharacter:
    """Character of U(g) determined by its values on the generators."""

    def __init__(self, gen_values, name="delta"):
        self.gen_values = [Fraction(v) for v in gen_values]
        self.name = name

    def value(self, key):
        out = ONE
        for i, a in enumerate(key):
            if a:
                out *= self.gen_values[i] ** a
        return out

    def of_element(self, elem):
        return sum((c * self.value(m) for m, c in elem.items()), ZERO)


class EnvelopingAlgebra:
    """U(g) with the PBW monomial basis.

    Basis keys are exponent tuples; the empty monomial (0,...,0) is 1.
    Provides the same basis/element interface as FiniteHopf, so the cyclic
    operator machinery runs unchanged on symbolic elements.
    """

    def __init__(self, lie):
        self.lie = lie
        self.name = f"U({lie.name})"
        self.dim = None  # infinite-dimensional
        self.field = _RATIONAL
        self._one_key = (0,) * lie.dim
        self._gen_mul_cache = {}

    def __repr__(self):
        return f"EnvelopingAlgebra({self.lie.name!r})"

    def monomial(self, exponents):
        key = tuple(exponents)
        if len(key) != self.lie.dim:
            raise ValueError("exponent vector has wrong length")
        return {key: ONE}

    def generator(self, i):
        key = [0] * self.lie.dim
        key[i] = 1
        return {tuple(key): ONE}

    def unit_element(self):
        return {self._one_key: ONE}

    def counit_basis(self, key):
        return ONE if not any(key) else ZERO

    def counit_of(self, a):
        return a.get(self._one_key, ZERO)

    # -- product with straightening

    def _mono_times_gen(self, mono, i):
        """Normal form of (monomial) * X_i."""
        cached = self._gen_mul_cache.get((mono, i))
        if cached is not None:
            return cached
        j = max((idx for idx, a in enumerate(mono) if a), default=-1)
        if j <= i:
            out = list(mono)
            out[i] += 1
            result = {tuple(out): ONE}
        else:
            # mono = head * X_j with j > i:  X_j X_i = X_i X_j + [X_j, X_i]
            head = list(mono)
            head[j] -= 1
            head = tuple(head)
            swapped = self._mono_times_gen(head, i)
            result = {}
            for m, c in swapped.items():
                lifted = list(m)
                lifted[j] += 1
                result = vec_add(result, {tuple(lifted): c})
            for k, c in self.lie.bracket(j, i).items():
                result = vec_add(result, vec_scale(c, self._mono_times_gen(head, k)))
        self._gen_mul_cache[(mono, i)] = result
        return result

    def _elem_times_gen(self, a, i):
        out = {}
        for m, c in a.items():
            out = vec_add(out, vec_scale(c, self._mono_times_gen(m, i)))
        return out

    def mul(self, a, b):
        out = {}
        for m, c in b.items():
            part = vec_scale(c, a)
            for i, power in enumerate(m):
                for _ in range(power):
                    part = self._elem_times_gen(part, i)
            out = vec_add(out, part)
        return out

    # -- coproduct: generators primitive, extended multiplicatively

    def comul_basis(self, key):
        out = {(self._one_key, self._one_key): ONE}
        for i, power in enumerate(key):
            for _ in range(power):
                gen = self.generator(i)
                step = {}
                for (l, r), c in out.items():
                    left = self.mul({l: ONE}, gen)
                    for m, d in left.items():
                        step = vec_add(step, {(m, r): c * d})
                    right = self.mul({r: ONE}, gen)
                    for m, d in right.items():
                        step = vec_add(step, {(l, m): c * d})
                out = step
        return out

    def comul(self, a):
        out = {}
        for key, c in a.items():
            out = vec_add(out, vec_scale(c, self.comul_basis(key)))
        return out

    # -- antipode: S(X_i) = -X_i, extended antimultiplicatively

    def antipode_basis(self, key):
        total = sum(key)
        rev = self.unit_element()
        # reversed product X_n^{a_n} ... X_1^{a_1}
        for i in range(len(key) - 1, -1, -1):
            for _ in range(key[i]):
                rev = self._elem_times_gen(rev, i)
        return vec_scale(ONE if total % 2 == 0 else -ONE, rev)

    def antipode_of(self, a):
        out = {}
        for key, c in a.items():
            out = vec_add(out, vec_scale(c, self.antipode_basis(key)))
        return out

    def twist_automorphism(self, delta, a):
        out = {}
        for key, c in a.items():
            for (l, r), d in self.comul_basis(key).items():
                out = vec_add(out, {r: c * d * delta.value(l)})
        return out

    def twisted_antipode(self, delta, a):
        out = {}
        for key, c in a.items():
            for (l, r), d in self.comul_basis(key).items():
                out = vec_add(out, vec_scale(
                    c * d * delta.value(l), self.antipode_basis(r)))
        return out

    def modular_character(self, name="delta"):
        return SymbolicCharacter(self.lie.adjoint_trace_character(), name=name)

    def monomials_up_to_degree(self, max_degree):
        """All PBW exponent vectors of total degree <= max_degree, lex order."""
        out = []

        def rec(prefix, remaining, slots):
            if slots == 0:
                out.append(tuple(prefix))
                return
            for a in range(remaining + 1):
                rec(prefix + [a], remaining - a, slots - 1)

        rec([], max_degree, self.lie.dim)
        return sorted(out)


def tensor_samples(algebra, N_max, max_degree=2, rng=None, random_count=3):
    """Sample tensors for relation checks on a rule-based algebra: all
    monomial tensors whose total degree stays within the bound, plus a few
    seeded random linear combinations per degree."""
    import itertools

    monos = algebra.monomials_up_to_degree(max_degree)
    one = algebra.field.one()
    samples = {}
    for n in range(N_max + 1):
        ts = []
        for combo in itertools.product(monos, repeat=n):
            if sum(sum(k) for k in combo) <= max_degree:
                ts.append({combo: one})
        if rng is not None and n >= 1:
            for _ in range(random_count):
                t = {}
                for _ in range(2):
                    key = tuple(rng.choice(monos) for _ in range(n))
                    c = Fraction(rng.randrange(-3, 4) or 1)
                    t[key] = t.get(key, algebra.field.zero()) + c
                t = {k: v for k, v in t.items() if v}
                if t:
                    ts.append(t)
        samples[n] = ts
    return samples
