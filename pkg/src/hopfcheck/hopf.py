"""Hopf algebra presentations by structure constants, truncated at degree N.

A presentation supplies rules for the product of two basis labels, the
coproduct of a label, the counit on degree-0 labels and the distinguished
unit label.  Rules may be backed by explicit tables or computed lazily;
results are cached and validated (grading) on first use.

The antipode of a connected presentation is built by the degree recursion
coming from the left antipode axiom, with an independent second recursion
from the right axiom available as a cross-check.  Non-connected
presentations must supply an explicit antipode table, which is verified,
never derived.
"""

from __future__ import annotations

from .errors import StructuralError, TruncationError, UnsupportedRingError
from .gmod import Element, GradedBasis, GradedMap, Tensor2Element
from .report import FAIL, PASS, Report, witness_of
from .rings import Ring


class HopfPresentation:
    def __init__(self, name: str, basis: GradedBasis, ring: Ring,
                 product_rule, coproduct_rule, counit0: dict,
                 unit_label: str, antipode_rule=None,
                 product_total: bool = False):
        if basis.degree_of(unit_label) != 0:
            raise StructuralError("unit label must have degree 0")
        self.name = name
        self.basis = basis
        self.ring = ring
        self.unit_label = unit_label
        self._product_rule = product_rule
        self._coproduct_rule = coproduct_rule
        self._counit0 = dict(counit0)
        self._antipode_rule = antipode_rule
        self._product_total = product_total
        self._product_cache: dict = {}
        self._coproduct_cache: dict = {}
        self._antipode: GradedMap | None = None
        self._antipode_right: GradedMap | None = None

    # basic accessors -----------------------------------------------------
    @property
    def max_degree(self) -> int:
        return self.basis.max_degree

    def zero(self) -> Element:
        return Element.zero(self.basis, self.ring)

    def element(self, label: str) -> Element:
        return Element.basis_vector(self.basis, self.ring, label)

    def unit(self) -> Element:
        return self.element(self.unit_label)

    def degree_of(self, label: str) -> int:
        return self.basis.degree_of(label)

    # structure maps ------------------------------------------------------
    def product_of_labels(self, l1: str, l2: str) -> Element:
        key = (l1, l2)
        cached = self._product_cache.get(key)
        if cached is not None:
            return cached
        d = self.degree_of(l1) + self.degree_of(l2)
        if d > self.max_degree and not self._product_total:
            raise TruncationError(
                f"product {l1!r}*{l2!r} has degree {d} > truncation {self.max_degree}")
        result = self._product_rule(l1, l2)
        if result is None:
            raise TruncationError(
                f"product table has no entry for {l1!r}*{l2!r} (degree {d})")
        if d <= self.max_degree:
            bad = result.degrees() - {d}
            if bad:
                raise StructuralError(
                    f"product {l1!r}*{l2!r} not homogeneous of degree {d}")
        self._product_cache[key] = result
        return result

    def coproduct_of_label(self, label: str) -> Tensor2Element:
        cached = self._coproduct_cache.get(label)
        if cached is not None:
            return cached
        result = self._coproduct_rule(label)
        n = self.degree_of(label)
        bad = {bd for bd in result.bidegree_support() if bd[0] + bd[1] != n}
        if bad:
            raise StructuralError(
                f"coproduct of {label!r} has off-degree support {sorted(bad)}")
        self._coproduct_cache[label] = result
        return result

    def counit_of_label(self, label: str):
        if self.degree_of(label) == 0:
            return self._counit0.get(label, self.ring.zero)
        return self.ring.zero

    def product(self, x: Element, y: Element) -> Element:
        out = self.zero()
        for l1, c1 in x.coeffs.items():
            for l2, c2 in y.coeffs.items():
                out = out + self.product_of_labels(l1, l2).scale(c1 * c2)
        return out

    def coproduct(self, x: Element) -> Tensor2Element:
        out = Tensor2Element.zero(self.basis, self.ring)
        for label, c in x.coeffs.items():
            out = out + self.coproduct_of_label(label).scale(c)
        return out

    def counit(self, x: Element):
        val = self.ring.zero
        for label, c in x.coeffs.items():
            val = val + c * self.counit_of_label(label)
        return val

    def unit_times_counit(self, x: Element) -> Element:
        return self.unit().scale(self.counit(x))

    def t2_product(self, s: Tensor2Element, t: Tensor2Element) -> Tensor2Element:
        """Componentwise product in the tensor square."""
        out = Tensor2Element.zero(self.basis, self.ring)
        for (a, b), c1 in s.coeffs.items():
            for (a2, b2), c2 in t.coeffs.items():
                left = self.product_of_labels(a, a2)
                right = self.product_of_labels(b, b2)
                out = out + left.tensor(right).scale(c1 * c2)
        return out

    # connectedness -------------------------------------------------------
    def is_connected(self) -> bool:
        """Degree-0 rank 1 with the counit sending the unit label to 1.

        When true, the inverse image of 1 under the counit on degree 0 is
        exactly the unit label, so the coalgebra unity and the algebra
        unity coincide.
        """
        if self.basis.rank(0) != 1:
            return False
        return self.counit_of_label(self.unit_label) == self.ring.one

    # antipode ------------------------------------------------------------
    def _explicit_antipode(self) -> GradedMap:
        images = {}
        for label in self.basis.labels:
            img = self._antipode_rule(label)
            if img is None:
                raise UnsupportedRingError(
                    f"explicit antipode table undefined on {label!r}")
            images[label] = img
        return GradedMap(self.basis, self.ring, images)

    def _recursive_antipode(self, right: bool) -> GradedMap:
        if not self.is_connected():
            if self._antipode_rule is not None:
                return self._explicit_antipode()
            raise UnsupportedRingError(
                f"{self.name}: not connected and no explicit antipode given")
        images = {self.unit_label: self.unit()}
        for d in range(1, self.max_degree + 1):
            for label in self.basis.labels_of_degree(d):
                acc = self.zero()
                for (l1, l2), c in self.coproduct_of_label(label).coeffs.items():
                    if right:
                        if self.degree_of(l2) >= d:
                            continue
                        term = self.product(self.element(l1), images[l2])
                    else:
                        if self.degree_of(l1) >= d:
                            continue
                        term = self.product(images[l1], self.element(l2))
                    acc = acc + term.scale(c)
                images[label] = -acc
        return GradedMap(self.basis, self.ring, images)

    def antipode(self) -> GradedMap:
        """Antipode from the left axiom recursion (cached)."""
        if self._antipode is None:
            self._antipode = self._recursive_antipode(right=False)
        return self._antipode

    def antipode_oracle(self) -> GradedMap:
        """Independent antipode from the right axiom recursion (cached)."""
        if self._antipode_right is None:
            if not self.is_connected() and self._antipode_rule is not None:
                self._antipode_right = self._explicit_antipode()
            else:
                self._antipode_right = self._recursive_antipode(right=True)
        return self._antipode_right

    def has_explicit_antipode(self) -> bool:
        return self._antipode_rule is not None

    # verifiers -----------------------------------------------------------
    def verify_bialgebra(self, up_to: int | None = None) -> Report:
        """Check the bialgebra axioms on basis labels up to a degree bound."""
        n = self.max_degree if up_to is None else up_to
        rep = Report(f"bialgebra({self.name})")
        labels = self.basis.labels_up_to(n)

        # unit axioms
        du = self.coproduct_of_label(self.unit_label)
        expected = self.unit().tensor(self.unit())
        if du == expected and self.counit_of_label(self.unit_label) == self.ring.one:
            rep.add("unit", "coproduct(1) = 1(x)1 and counit(1) = 1", PASS)
        else:
            rep.add("unit", "coproduct(1) = 1(x)1 and counit(1) = 1", FAIL,
                    witness_of(self.unit_label, du))

        # coassociativity on labels, via triple-tensor dicts
        def triple_left(label):
            out = {}
            for (a, b), c in self.coproduct_of_label(label).coeffs.items():
                for (a1, a2), c2 in self.coproduct_of_label(a).coeffs.items():
                    k = (a1, a2, b)
                    v = c * c2
                    out[k] = out[k] + v if k in out else v
            return {k: v for k, v in out.items() if v}

        def triple_right(label):
            out = {}
            for (a, b), c in self.coproduct_of_label(label).coeffs.items():
                for (b1, b2), c2 in self.coproduct_of_label(b).coeffs.items():
                    k = (a, b1, b2)
                    v = c * c2
                    out[k] = out[k] + v if k in out else v
            return {k: v for k, v in out.items() if v}

        self._per_label(rep, "coassociativity",
                        "(coproduct(x)id) o coproduct = (id(x)coproduct) o coproduct",
                        labels, lambda l: triple_left(l) == triple_right(l),
                        lambda l: witness_of(l))

        # counit axioms
        def counit_left_ok(label):
            acc = self.zero()
            for (a, b), c in self.coproduct_of_label(label).coeffs.items():
                acc = acc + self.element(a).scale(c * self.counit_of_label(b))
            return acc == self.element(label)

        def counit_right_ok(label):
            acc = self.zero()
            for (a, b), c in self.coproduct_of_label(label).coeffs.items():
                acc = acc + self.element(b).scale(c * self.counit_of_label(a))
            return acc == self.element(label)

        self._per_label(rep, "counit-left", "(id(x)counit) o coproduct = id",
                        labels, counit_left_ok, lambda l: witness_of(l))
        self._per_label(rep, "counit-right", "(counit(x)id) o coproduct = id",
                        labels, counit_right_ok, lambda l: witness_of(l))

        # compatibility: coproduct and counit are algebra maps
        pairs = [(l1, l2) for l1 in labels for l2 in labels
                 if self.degree_of(l1) + self.degree_of(l2) <= n]
        ok = PASS
        wit = None
        for l1, l2 in pairs:
            lhs = self.coproduct(self.product_of_labels(l1, l2))
            rhs = self.t2_product(self.coproduct_of_label(l1),
                                  self.coproduct_of_label(l2))
            if lhs != rhs:
                ok, wit = FAIL, witness_of((l1, l2), lhs - rhs)
                break
        rep.add("coproduct-multiplicative",
                "coproduct(x*y) = coproduct(x)*coproduct(y)", ok, wit)

        ok = PASS
        wit = None
        for l1, l2 in pairs:
            lhs = self.counit(self.product_of_labels(l1, l2))
            rhs = self.counit_of_label(l1) * self.counit_of_label(l2)
            if lhs != rhs:
                ok, wit = FAIL, witness_of((l1, l2), lhs)
                break
        rep.add("counit-multiplicative", "counit(x*y) = counit(x)*counit(y)",
                ok, wit)
        return rep

    def verify_antipode_axioms(self, S: GradedMap | None = None,
                               up_to: int | None = None) -> Report:
        """Check m o (S(x)id) o coproduct = unit o counit and its mirror."""
        if S is None:
            S = self.antipode()
        n = self.max_degree if up_to is None else up_to
        rep = Report(f"antipode-axioms({self.name})")
        labels = self.basis.labels_up_to(n)

        def left_ok(label):
            acc = self.zero()
            for (a, b), c in self.coproduct_of_label(label).coeffs.items():
                acc = acc + self.product(S(self.element(a)), self.element(b)).scale(c)
            return acc == self.unit_times_counit(self.element(label))

        def right_ok(label):
            acc = self.zero()
            for (a, b), c in self.coproduct_of_label(label).coeffs.items():
                acc = acc + self.product(self.element(a), S(self.element(b))).scale(c)
            return acc == self.unit_times_counit(self.element(label))

        self._per_label(rep, "left-axiom",
                        "m o (S(x)id) o coproduct = unit o counit",
                        labels, left_ok, lambda l: witness_of(l))
        self._per_label(rep, "right-axiom",
                        "m o (id(x)S) o coproduct = unit o counit",
                        labels, right_ok, lambda l: witness_of(l))
        return rep

    @staticmethod
    def _per_label(rep, claim, statement, labels, predicate, witness):
        for label in labels:
            if not predicate(label):
                rep.add(claim, statement, FAIL, witness(label))
                return
        rep.add(claim, statement, PASS)
