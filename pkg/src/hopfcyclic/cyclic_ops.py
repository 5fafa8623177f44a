"""Cyclic-module operators on tensor powers of a Hopf algebra, on algebra
cochain spaces, and the relation suites tying them together.

Tensor elements are sparse maps from tuples of basis keys to scalars;
degree 0 is the ground field with the single basis key ().

Degree-0 conventions: both faces out of degree 0 are the unit map, the
degeneracy into degree 0 is the counit, and the cyclic operator in degree 0
is the identity.  These are exactly what the (b, B)-machinery needs.
"""

from __future__ import annotations

import itertools

from .hopf import vec_add, vec_scale, vec_eq
from .linalg import SparseMatrix
from .reports import CheckReport


class HopfCyclicModule:
    """The cyclic module {H^(x)n} of a Hopf algebra with character delta.

    Works for finite-dimensional algebras (basis keys are ints, matrices
    available) and for rule-based ones such as U(g) (basis keys are PBW
    exponent tuples, element-level operations only).
    """

    def __init__(self, hopf, delta):
        self.hopf = hopf
        self.delta = delta
        self.field = hopf.field

    # -- elementwise operators

    def face(self, i, n, t):
        """Face operator from degree n-1 to degree n, 0 <= i <= n."""
        if not 1 <= n or not 0 <= i <= n:
            raise IndexError(f"face index {i} out of range at degree {n}")
        H = self.hopf
        unit = H.unit_element()
        out = {}
        for key, c in t.items():
            if n == 1:
                # both faces out of degree 0 send 1 to 1_H
                for u, cu in unit.items():
                    out = vec_add(out, {(u,): c * cu})
                continue
            if i == 0:
                for u, cu in unit.items():
                    out = vec_add(out, {(u,) + key: c * cu})
            elif i == n:
                for u, cu in unit.items():
                    out = vec_add(out, {key + (u,): c * cu})
            else:
                for (a, b), d in H.comul_basis(key[i - 1]).items():
                    out = vec_add(
                        out, {key[:i - 1] + (a, b) + key[i:]: c * d})
        return out

    def degeneracy(self, i, n, t):
        """Degeneracy from degree n+1 to degree n, 0 <= i <= n."""
        if not 0 <= i <= n:
            raise IndexError(f"degeneracy index {i} out of range at degree {n}")
        H = self.hopf
        out = {}
        for key, c in t.items():
            d = c * H.counit_basis(key[i])
            if d:
                out = vec_add(out, {key[:i] + key[i + 1:]: d})
        return out

    def cyclic(self, n, t):
        """tau_n: multiply the iterated coproduct of S~(h^1) slotwise against
        the left-shifted tensor with 1 appended.  Identity in degree 0."""
        if n == 0:
            return dict(t)
        H = self.hopf
        unit = H.unit_element()
        out = {}
        for key, c in t.items():
            st = H.twisted_antipode(self.delta, {key[0]: H.field.one()})
            legs = iterated_comul(H, st, n)
            shifted = [{k: H.field.one()} for k in key[1:]] + [unit]
            out = vec_add(out, vec_scale(c, slotwise_product(H, legs, shifted)))
        return out

    def cyclic_power_formula(self, j, n, t):
        """Closed form for tau_n^j: the iterated coproduct of S~ of the j-th
        factor times the rotation with 1 in place, for 1 <= j <= n+1."""
        if not 1 <= j <= n + 1:
            raise IndexError(f"power {j} out of range at degree {n}")
        H = self.hopf
        unit = H.unit_element()
        out = {}
        for key, c in t.items():
            if j == n + 1:
                st = H.twisted_antipode(self.delta, unit)
                legs = iterated_comul(H, st, n)
                shifted = [{k: H.field.one()} for k in key]
            else:
                st = H.twisted_antipode(
                    self.delta, {key[j - 1]: H.field.one()})
                legs = iterated_comul(H, st, n)
                shifted = ([{k: H.field.one()} for k in key[j:]]
                           + [unit]
                           + [{k: H.field.one()} for k in key[:j - 1]])
            out = vec_add(out, vec_scale(c, slotwise_product(H, legs, shifted)))
        return out

    # -- finite-dimensional extras

    def space_dim(self, n):
        return self.hopf.dim ** n

    def basis_keys(self, n):
        """Basis tuples of degree n in lexicographic order."""
        return itertools.product(range(self.hopf.dim), repeat=n)

    def key_index(self, key):
        idx = 0
        for k in key:
            idx = idx * self.hopf.dim + k
        return idx

    def key_of_index(self, idx, n):
        base = self.hopf.dim
        digits = []
        for _ in range(n):
            idx, r = divmod(idx, base)
            digits.append(r)
        return tuple(reversed(digits))

    def samples(self, n):
        one = self.hopf.field.one()
        return [{key: one} for key in self.basis_keys(n)]

    def operator_matrix(self, op, src_degree, tgt_degree):
        """Assemble the exact matrix of an elementwise operator; columns are
        basis tuples of the source degree in lexicographic order."""
        cols = []
        for key in self.basis_keys(src_degree):
            image = op({key: self.hopf.field.one()})
            cols.append({self.key_index(k): v for k, v in image.items()})
        return SparseMatrix.from_columns(cols, self.space_dim(tgt_degree))

    def face_matrix(self, i, n):
        return self.operator_matrix(lambda t: self.face(i, n, t), n - 1, n)

    def degeneracy_matrix(self, i, n):
        return self.operator_matrix(lambda t: self.degeneracy(i, n, t), n + 1, n)

    def cyclic_matrix(self, n):
        return self.operator_matrix(lambda t: self.cyclic(n, t), n, n)


def iterated_comul(H, elem, n):
    """Delta^(n-1) of an element, as a degree-n tensor (Delta^0 = id)."""
    t = {(k,): c for k, c in elem.items()}
    for _ in range(n - 1):
        out = {}
        for key, c in t.items():
            for (a, b), d in H.comul_basis(key[-1]).items():
                out = vec_add(out, {key[:-1] + (a, b): c * d})
        t = out
    return t


def slotwise_product(H, tensor, factors):
    """Multiply a degree-n tensor slotwise by a list of n elements."""
    out = {}
    for key, c in tensor.items():
        partial = [((), c)]
        for slot, k in enumerate(key):
            prod = H.mul({k: H.field.one()}, factors[slot])
            partial = [(pk + (m,), pc * mc)
                       for pk, pc in partial for m, mc in prod.items()]
            if not partial:
                break
        for pk, pc in partial:
            out = vec_add(out, {pk: pc})
    return out


class CochainCyclicModule:
    """The cyclic module of multilinear forms on a finite algebra.

    Cochains of degree n are coefficient tensors on (n+1)-tuples of basis
    indices.  Faces multiply consecutive arguments (the last one wraps
    around), degeneracies insert the unit, the cyclic operator rotates the
    arguments.
    """

    def __init__(self, algebra):
        self.algebra = algebra
        self.field = algebra.field
        self._rev = algebra.reverse_product_table()

    def face(self, i, n, phi):
        """From cochains on n-tuples to cochains on (n+1)-tuples, 0 <= i <= n."""
        if not 1 <= n or not 0 <= i <= n:
            raise IndexError(f"face index {i} out of range at degree {n}")
        out = {}
        for key, c in phi.items():
            if i < n:
                for (a, b, d) in self._rev[key[i]]:
                    out = vec_add(
                        out, {key[:i] + (a, b) + key[i + 1:]: c * d})
            else:
                for (a, b, d) in self._rev[key[0]]:
                    out = vec_add(out, {(b,) + key[1:] + (a,): c * d})
        return out

    def degeneracy(self, i, n, phi):
        """Insert the algebra unit as argument i+1; degree n+1 to n."""
        if not 0 <= i <= n:
            raise IndexError(f"degeneracy index {i} out of range at degree {n}")
        unit = self.algebra.unit
        out = {}
        for key, c in phi.items():
            cu = unit.get(key[i + 1])
            if cu:
                out = vec_add(out, {key[:i + 1] + key[i + 2:]: c * cu})
        return out

    def cyclic(self, n, phi):
        """Rotate arguments: the new last argument moves to the front."""
        return {key[1:] + (key[0],): c for key, c in phi.items()}

    def space_dim(self, n):
        return self.algebra.dim ** (n + 1)

    def basis_keys(self, n):
        return itertools.product(range(self.algebra.dim), repeat=n + 1)

    def key_index(self, key):
        idx = 0
        for k in key:
            idx = idx * self.algebra.dim + k
        return idx

    def key_of_index(self, idx, n):
        base = self.algebra.dim
        digits = []
        for _ in range(n + 1):
            idx, r = divmod(idx, base)
            digits.append(r)
        return tuple(reversed(digits))

    def samples(self, n):
        one = self.algebra.field.one()
        return [{key: one} for key in self.basis_keys(n)]

    def operator_matrix(self, op, src_degree, tgt_degree):
        cols = []
        for key in self.basis_keys(src_degree):
            image = op({key: self.algebra.field.one()})
            cols.append({self.key_index(k): v for k, v in image.items()})
        return SparseMatrix.from_columns(cols, self.space_dim(tgt_degree))


# ---------------------------------------------------------------------------
# relation suites


def _relation_instances(N_max):
    """All relation instances whose operators stay within degree N_max.

    Each instance is (relation_id, degree, index_tuple, lhs_word, rhs_word)
    where words are generator sequences applied right to left, each generator
    a tag ('d'|'s'|'t', index, degree).
    """
    out = []
    for n in range(2, N_max + 1):
        for j in range(1, n + 1):
            for i in range(j):
                out.append(("dd", n, (i, j),
                            [("d", j, n), ("d", i, n - 1)],
                            [("d", i, n), ("d", j - 1, n - 1)]))
    for s in range(2, N_max + 1):
        for i in range(s - 1):
            for j in range(i, s - 1):
                out.append(("ss", s, (i, j),
                            [("s", j, s - 2), ("s", i, s - 1)],
                            [("s", i, s - 2), ("s", j + 1, s - 1)]))
    for s in range(0, N_max):
        for i in range(s + 2):
            for j in range(s + 1):
                lhs = [("s", j, s), ("d", i, s + 1)]
                if i < j:
                    rhs = [("d", i, s), ("s", j - 1, s - 1)]
                elif i in (j, j + 1):
                    rhs = []
                else:
                    rhs = [("d", i - 1, s), ("s", j, s - 1)]
                out.append(("sd", s, (i, j), lhs, rhs))
    for n in range(1, N_max + 1):
        for i in range(1, n + 1):
            out.append(("td", n, (i,),
                        [("t", 0, n), ("d", i, n)],
                        [("d", i - 1, n), ("t", 0, n - 1)]))
        out.append(("td0", n, (0,), [("t", 0, n), ("d", 0, n)],
                    [("d", n, n)]))
    for n in range(0, N_max):
        for i in range(1, n + 1):
            out.append(("ts", n, (i,),
                        [("t", 0, n), ("s", i, n)],
                        [("s", i - 1, n), ("t", 0, n + 1)]))
        out.append(("ts0", n, (0,), [("t", 0, n), ("s", 0, n)],
                    [("s", n, n), ("t", 0, n + 1), ("t", 0, n + 1)]))
    for n in range(0, N_max + 1):
        out.append(("tpow", n, (),
                    [("t", 0, n)] * (n + 1), []))
    return out


def word_source_degree(word, default):
    """Degree on which a generator word acts (rightmost generator first)."""
    if not word:
        return default
    kind, _, deg = word[-1]
    if kind == "d":
        return deg - 1
    if kind == "s":
        return deg + 1
    return deg


def apply_generator(module, gen, t):
    kind, i, n = gen
    if kind == "d":
        return module.face(i, n, t)
    if kind == "s":
        return module.degeneracy(i, n, t)
    if kind == "t":
        return module.cyclic(n, t)
    raise ValueError(f"unknown generator {gen!r}")


def apply_word(module, word, t):
    for gen in reversed(word):
        t = apply_generator(module, gen, t)
    return t


def relation_suite(module, N_max, samples=None, title=None):
    """Verify every simplicial and cyclic relation with operators of degree
    <= N_max, as exact equalities on basis tensors (or supplied samples).

    ``samples``: optional callable degree -> list of tensors; defaults to the
    module's full basis (finite-dimensional case).
    """
    report = CheckReport(title or "cyclic-relations",
                         meta={"max-degree": N_max})
    get_samples = samples or module.samples
    instances = _relation_instances(N_max)
    grouped = {}
    for rel, n, idx, lhs, rhs in instances:
        grouped.setdefault((rel, n), []).append((idx, lhs, rhs))
    for (rel, n), items in sorted(grouped.items()):
        ok, witness = True, None
        for idx, lhs, rhs in items:
            src = word_source_degree(lhs, n)
            for t in get_samples(src):
                left = apply_word(module, lhs, t)
                right = apply_word(module, rhs, t)
                if not vec_eq(left, right):
                    ok = False
                    witness = (idx, sorted(t), sorted(left.items()),
                               sorted(right.items()))
                    break
            if not ok:
                break
        report.add(f"{rel} n={n}", ok, witness)
    return report


def check_cyclic_power_formula(module, n, j, tensors):
    """tau_n^j computed by iteration equals the closed rotation formula."""
    for t in tensors:
        lhs = dict(t)
        for _ in range(j):
            lhs = module.cyclic(n, lhs)
        rhs = module.cyclic_power_formula(j, n, t)
        if not vec_eq(lhs, rhs):
            return False, (n, j, sorted(t))
    return True, None
