"""Graded free modules with a finite named basis per degree.

Elements of the module and of its tensor square are sparse coefficient
dicts (label -> RingElement, resp. (label, label) -> RingElement) with no
stored zeros.  Linear maps are stored by their images on basis labels and
support composition, powers, sums and tensor products.
"""

from __future__ import annotations

from .errors import StructuralError, UnsupportedRingError
from .rings import Ring, RingElement


class GradedBasis:
    """Ordered basis labels per degree, up to a truncation degree."""

    def __init__(self, degrees):
        self.degrees = tuple(tuple(labels) for labels in degrees)
        self.max_degree = len(self.degrees) - 1
        self._degree_of = {}
        for d, labels in enumerate(self.degrees):
            for label in labels:
                if label in self._degree_of:
                    raise StructuralError(f"duplicate basis label {label!r}")
                self._degree_of[label] = d
        self.labels = tuple(self._degree_of)

    def degree_of(self, label: str) -> int:
        try:
            return self._degree_of[label]
        except KeyError:
            raise StructuralError(f"unknown basis label {label!r}") from None

    def labels_of_degree(self, d: int):
        if d < 0 or d > self.max_degree:
            return ()
        return self.degrees[d]

    def labels_up_to(self, d: int):
        out = []
        for i in range(min(d, self.max_degree) + 1):
            out.extend(self.degrees[i])
        return tuple(out)

    def rank(self, d: int) -> int:
        return len(self.labels_of_degree(d))

    def __contains__(self, label):
        return label in self._degree_of

    def __eq__(self, other):
        return isinstance(other, GradedBasis) and other.degrees == self.degrees

    def __hash__(self):
        return hash(self.degrees)

    def __repr__(self):
        ranks = ",".join(str(len(ls)) for ls in self.degrees)
        return f"GradedBasis(ranks=[{ranks}])"


def _prune(coeffs: dict) -> dict:
    return {k: v for k, v in coeffs.items() if v}


class _Sparse:
    """Shared arithmetic for Element and Tensor2Element."""

    __slots__ = ("basis", "ring", "coeffs")

    def __init__(self, basis: GradedBasis, ring: Ring, coeffs: dict):
        self.basis = basis
        self.ring = ring
        self.coeffs = _prune(coeffs)

    def _check(self, other):
        if self.basis != other.basis or self.ring != other.ring:
            raise StructuralError("operands from different modules")
        if type(self) is not type(other):
            raise StructuralError("mixing module and tensor-square elements")

    def __add__(self, other):
        self._check(other)
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out[k] + v if k in out else v
        return type(self)(self.basis, self.ring, out)

    def __sub__(self, other):
        self._check(other)
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out[k] - v if k in out else -v
        return type(self)(self.basis, self.ring, out)

    def __neg__(self):
        return type(self)(self.basis, self.ring,
                          {k: -v for k, v in self.coeffs.items()})

    def scale(self, c):
        c = self.ring.element(c)
        return type(self)(self.basis, self.ring,
                          {k: c * v for k, v in self.coeffs.items()})

    def __rmul__(self, c):
        return self.scale(c)

    def coeff(self, key) -> RingElement:
        return self.coeffs.get(key, self.ring.zero)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        if not isinstance(other, _Sparse):
            return NotImplemented
        return (type(self) is type(other) and self.basis == other.basis
                and self.ring == other.ring and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((type(self), self.ring, frozenset(self.coeffs.items())))

    def __repr__(self):
        if not self.coeffs:
            return "0"
        return " + ".join(f"{v}*{k}" for k, v in sorted(
            self.coeffs.items(), key=lambda kv: str(kv[0])))


class Element(_Sparse):
    """Sparse module element: label -> coefficient."""

    @classmethod
    def zero(cls, basis, ring):
        return cls(basis, ring, {})

    @classmethod
    def basis_vector(cls, basis, ring, label):
        basis.degree_of(label)
        return cls(basis, ring, {label: ring.one})

    def degrees(self):
        return {self.basis.degree_of(l) for l in self.coeffs}

    def tensor(self, other: "Element") -> "Tensor2Element":
        self._check(other)
        out = {}
        for l1, c1 in self.coeffs.items():
            for l2, c2 in other.coeffs.items():
                out[(l1, l2)] = c1 * c2
        return Tensor2Element(self.basis, self.ring, out)


def tensor_of(x: Element, y: Element) -> Tensor2Element:
    return x.tensor(y)


class Tensor2Element(_Sparse):
    """Sparse tensor-square element: (label, label) -> coefficient."""

    @classmethod
    def zero(cls, basis, ring):
        return cls(basis, ring, {})

    def bidegree_support(self):
        deg = self.basis.degree_of
        return {(deg(l1), deg(l2)) for (l1, l2) in self.coeffs}


class GradedMap:
    """A linear endomap given by its images on all basis labels.

    By default images must be homogeneous of their label's degree; with
    ``filtered=True`` they may live in any degree up to that bound.
    """

    __slots__ = ("basis", "ring", "images")

    def __init__(self, basis: GradedBasis, ring: Ring, images: dict,
                 filtered: bool = False):
        missing = [l for l in basis.labels if l not in images]
        if missing:
            raise StructuralError(f"map undefined on labels {missing[:3]}")
        self.basis = basis
        self.ring = ring
        self.images = images
        for label, img in images.items():
            bound = basis.degree_of(label)
            bad = [d for d in img.degrees()
                   if d > bound or (d != bound and not filtered)]
            if bad:
                raise StructuralError(
                    f"image of {label!r} has degree {max(bad)}, "
                    f"violating the degree bound {bound}")

    @classmethod
    def from_function(cls, basis, ring, fn, filtered=False):
        return cls(basis, ring, {l: fn(l) for l in basis.labels}, filtered)

    @classmethod
    def identity(cls, basis, ring):
        return cls(basis, ring,
                   {l: Element.basis_vector(basis, ring, l) for l in basis.labels})

    @classmethod
    def zero(cls, basis, ring):
        z = Element.zero(basis, ring)
        return cls(basis, ring, {l: z for l in basis.labels})

    def _check(self, other):
        if self.basis != other.basis or self.ring != other.ring:
            raise StructuralError("maps over different modules")

    def __call__(self, x: Element) -> Element:
        if x.basis != self.basis or x.ring != self.ring:
            raise StructuralError("argument from a different module")
        out = {}
        for label, c in x.coeffs.items():
            for l2, v in self.images[label].coeffs.items():
                t = c * v
                out[l2] = out[l2] + t if l2 in out else t
        return Element(self.basis, self.ring, out)

    def compose(self, other: "GradedMap") -> "GradedMap":
        """self after other."""
        self._check(other)
        return GradedMap(self.basis, self.ring,
                         {l: self(other.images[l]) for l in self.basis.labels})

    def __add__(self, other):
        self._check(other)
        return GradedMap(self.basis, self.ring,
                         {l: self.images[l] + other.images[l]
                          for l in self.basis.labels})

    def __sub__(self, other):
        self._check(other)
        return GradedMap(self.basis, self.ring,
                         {l: self.images[l] - other.images[l]
                          for l in self.basis.labels})

    def scale(self, c) -> "GradedMap":
        c = self.ring.element(c)
        return GradedMap(self.basis, self.ring,
                         {l: img.scale(c) for l, img in self.images.items()})

    def power(self, k: int) -> "GradedMap":
        if k < 0:
            raise StructuralError("negative map power")
        out = GradedMap.identity(self.basis, self.ring)
        for _ in range(k):
            out = self.compose(out)
        return out

    def tensor(self, other: "GradedMap") -> "Tensor2Map":
        self._check(other)
        images = {}
        for l1 in self.basis.labels:
            for l2 in self.basis.labels:
                images[(l1, l2)] = self.images[l1].tensor(other.images[l2])
        return Tensor2Map(self.basis, self.ring, images)

    def apply_tensor(self, other: "GradedMap", t: Tensor2Element) -> Tensor2Element:
        """(self (x) other)(t) without materializing the tensor map."""
        self._check(other)
        out = Tensor2Element.zero(self.basis, self.ring)
        for (l1, l2), c in t.coeffs.items():
            out = out + self.images[l1].tensor(other.images[l2]).scale(c)
        return out

    def __eq__(self, other):
        if not isinstance(other, GradedMap):
            return NotImplemented
        return (self.basis == other.basis and self.ring == other.ring
                and self.images == other.images)

    def __hash__(self):
        raise TypeError("GradedMap is not hashable")


class Tensor2Map:
    """A linear endomap of the tensor square, by images on label pairs."""

    __slots__ = ("basis", "ring", "images")

    def __init__(self, basis: GradedBasis, ring: Ring, images: dict):
        self.basis = basis
        self.ring = ring
        self.images = images

    @classmethod
    def identity(cls, basis, ring):
        images = {}
        for l1 in basis.labels:
            for l2 in basis.labels:
                images[(l1, l2)] = Tensor2Element(basis, ring, {(l1, l2): ring.one})
        return cls(basis, ring, images)

    def _check(self, other):
        if self.basis != other.basis or self.ring != other.ring:
            raise StructuralError("maps over different modules")

    def __call__(self, t: Tensor2Element) -> Tensor2Element:
        out = {}
        for pair, c in t.coeffs.items():
            for p2, v in self.images[pair].coeffs.items():
                w = c * v
                out[p2] = out[p2] + w if p2 in out else w
        return Tensor2Element(self.basis, self.ring, out)

    def compose(self, other: "Tensor2Map") -> "Tensor2Map":
        self._check(other)
        return Tensor2Map(self.basis, self.ring,
                          {pair: self(img) for pair, img in other.images.items()})

    def __add__(self, other):
        self._check(other)
        return Tensor2Map(self.basis, self.ring,
                          {p: self.images[p] + other.images[p] for p in self.images})

    def __sub__(self, other):
        self._check(other)
        return Tensor2Map(self.basis, self.ring,
                          {p: self.images[p] - other.images[p] for p in self.images})

    def scale(self, c):
        c = self.ring.element(c)
        return Tensor2Map(self.basis, self.ring,
                          {p: img.scale(c) for p, img in self.images.items()})

    def power(self, k: int) -> "Tensor2Map":
        if k < 0:
            raise StructuralError("negative map power")
        out = Tensor2Map.identity(self.basis, self.ring)
        for _ in range(k):
            out = self.compose(out)
        return out

    def __eq__(self, other):
        if not isinstance(other, Tensor2Map):
            return NotImplemented
        return (self.basis == other.basis and self.ring == other.ring
                and self.images == other.images)


def kernel_vectors(columns: dict, keys, ring: Ring):
    """Kernel of the linear map sending key k to the sparse column columns[k].

    ``columns`` maps each key in ``keys`` to a dict (row-key -> RingElement).
    Returns a spanning list of kernel vectors as dicts key -> RingElement,
    computed by exact Gaussian elimination.  Requires a field.
    """
    if not ring.is_field:
        raise UnsupportedRingError(f"kernel computation needs a field, got {ring}")
    keys = list(keys)
    row_keys = []
    row_index = {}
    for k in keys:
        for rk in columns[k]:
            if rk not in row_index:
                row_index[rk] = len(row_keys)
                row_keys.append(rk)
    ncols, nrows = len(keys), len(row_keys)
    zero = ring.zero
    mat = [[zero] * ncols for _ in range(nrows)]
    for j, k in enumerate(keys):
        for rk, v in columns[k].items():
            mat[row_index[rk]][j] = v
    # row echelon with leftmost-nonzero pivoting
    pivot_col_of_row = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if mat[i][c]), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = mat[r][c].inverse()
        mat[r] = [inv * v for v in mat[r]]
        for i in range(nrows):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [mat[i][j] - f * mat[r][j] for j in range(ncols)]
        pivot_col_of_row.append(c)
        r += 1
        if r == nrows:
            break
    pivot_cols = set(pivot_col_of_row)
    kernel = []
    for c in range(ncols):
        if c in pivot_cols:
            continue
        vec = {keys[c]: ring.one}
        for i, pc in enumerate(pivot_col_of_row):
            v = mat[i][c]
            if v:
                vec[keys[pc]] = -v
        kernel.append(vec)
    return kernel


def kernel_basis(f: GradedMap, d: int):
    """Basis of Ker(f) restricted to the degree-d component."""
    labels = f.basis.labels_of_degree(d)
    columns = {l: f.images[l].coeffs for l in labels}
    vecs = kernel_vectors(columns, labels, f.ring)
    return [Element(f.basis, f.ring, v) for v in vecs]
