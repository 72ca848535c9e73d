//! Algebra context, basis blades, and grade sets.
//!
//! A context fixes the dimension `n` of the base space `V` and with it the
//! canonical pair of dual bases `{e_j, w^j}` with `w^i(e_j) = delta^i_j`.
//! Basis blades of either variance are encoded as bit subsets of
//! `{0, .., n-1}`.

use core::fmt;

/// Largest supported dimension. Blade masks fit in a `u16` and exhaustive
/// `2^n` enumerations stay small.
pub const MAX_DIM: usize = 12;

/// Errors produced by the algebra kernel.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Dimension outside `1..=MAX_DIM`.
    BadDimension(usize),
    /// Two values from different algebra contexts were combined.
    CtxMismatch,
    /// A grade index outside `0..=n`.
    GradeOutOfRange(usize),
    /// Operator matrix is singular (|det| below threshold).
    SingularOperator,
    /// A value was required to live in `V` (grade-1 support only).
    NotAVector,
    /// A value was required to be homogeneous.
    NotHomogeneous,
    /// Argument lists of mismatched length.
    LengthMismatch,
    /// Extensor argument count or variance does not match its signature.
    SignatureMismatch,
    /// Operation defined only for one-variable extensors.
    UnsupportedArity,
    /// Duality products pair a multiform with a multivector, never two
    /// values of the same variance.
    VarianceMismatch,
    /// Grade set is empty or has members above `n`.
    BadGradeSet,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::BadDimension(n) => write!(f, "dimension {} outside 1..={}", n, MAX_DIM),
            Error::CtxMismatch => write!(f, "algebra context mismatch"),
            Error::GradeOutOfRange(k) => write!(f, "grade {} out of range", k),
            Error::SingularOperator => write!(f, "singular operator"),
            Error::NotAVector => write!(f, "value is not a vector (grade-1) element"),
            Error::NotHomogeneous => write!(f, "value is not homogeneous"),
            Error::LengthMismatch => write!(f, "argument lists have different lengths"),
            Error::SignatureMismatch => write!(f, "arguments do not match extensor signature"),
            Error::UnsupportedArity => write!(f, "operation requires a one-variable extensor"),
            Error::VarianceMismatch => write!(f, "operands must have opposite variance"),
            Error::BadGradeSet => write!(f, "invalid grade set"),
        }
    }
}

pub type Result<T> = core::result::Result<T, Error>;

/// Dimension-`n` algebra context. Two contexts are interchangeable iff their
/// dimensions agree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AlgebraContext {
    n: usize,
}

impl AlgebraContext {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_DIM {
            return Err(Error::BadDimension(n));
        }
        Ok(AlgebraContext { n })
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.n
    }

    /// Number of basis blades of the full algebra, `2^n`.
    #[inline]
    pub fn blade_count(&self) -> usize {
        1usize << self.n
    }

    /// All basis blades in mask order.
    pub fn blades(&self) -> impl Iterator<Item = BladeMask> {
        (0..self.blade_count() as u16).map(BladeMask)
    }

    /// Basis blades of grade `k`, in mask order. There are `C(n, k)` of them.
    pub fn blades_of_grade(&self, k: usize) -> impl Iterator<Item = BladeMask> {
        self.blades().filter(move |b| b.grade() == k)
    }

    pub fn check_grade(&self, k: usize) -> Result<()> {
        if k > self.n {
            Err(Error::GradeOutOfRange(k))
        } else {
            Ok(())
        }
    }

    /// Mask of the pseudoscalar blade `e_1 ^ .. ^ e_n`.
    pub fn pseudoscalar_mask(&self) -> BladeMask {
        BladeMask((self.blade_count() - 1) as u16)
    }
}

/// A canonical basis blade of either exterior algebra: the subset
/// `{j_1 < .. < j_k}` of `{0, .., n-1}` standing for
/// `e_{j_1} ^ .. ^ e_{j_k}` (or the corresponding `w` blade).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BladeMask(pub u16);

impl BladeMask {
    pub const SCALAR: BladeMask = BladeMask(0);

    pub fn from_indices(indices: &[usize]) -> Self {
        let mut bits = 0u16;
        for &i in indices {
            bits |= 1 << i;
        }
        BladeMask(bits)
    }

    #[inline]
    pub fn grade(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn contains(self, other: BladeMask) -> bool {
        self.0 & other.0 == other.0
    }

    #[inline]
    pub fn intersects(self, other: BladeMask) -> bool {
        self.0 & other.0 != 0
    }

    #[inline]
    pub fn union(self, other: BladeMask) -> BladeMask {
        BladeMask(self.0 | other.0)
    }

    #[inline]
    pub fn difference(self, other: BladeMask) -> BladeMask {
        BladeMask(self.0 & !other.0)
    }

    /// Sorted index list of the blade factors.
    pub fn indices(self) -> impl Iterator<Item = usize> {
        let bits = self.0;
        (0..16usize).filter(move |i| bits & (1 << i) != 0)
    }
}

/// Sign of `e_A ^ e_B` relative to the sorted blade `e_{A u B}`, for disjoint
/// masks: `(-1)^t` with `t` the number of transpositions needed to merge-sort
/// the concatenated index lists. Returns 0.0 when the masks intersect.
pub fn wedge_sign(a: BladeMask, b: BladeMask) -> f64 {
    if a.intersects(b) {
        return 0.0;
    }
    merge_sign(a, b)
}

/// Merge sign for disjoint masks (caller guarantees disjointness).
pub(crate) fn merge_sign(a: BladeMask, b: BladeMask) -> f64 {
    // counts pairs (i in a, j in b) with j < i
    let mut x = a.0 >> 1;
    let mut swaps = 0u32;
    while x != 0 {
        swaps += (x & b.0).count_ones();
        x >>= 1;
    }
    if swaps.is_multiple_of(2) {
        1.0
    } else {
        -1.0
    }
}

/// Sign of the grade involution on grade `k`: `(-1)^k`.
#[inline]
pub fn involution_sign(k: usize) -> f64 {
    if k.is_multiple_of(2) {
        1.0
    } else {
        -1.0
    }
}

/// Sign of the reversion on grade `k`: `(-1)^{k(k-1)/2}`.
#[inline]
pub fn reversion_sign(k: usize) -> f64 {
    if (k * (k.wrapping_sub(1).min(k)) / 2).is_multiple_of(2) {
        1.0
    } else {
        -1.0
    }
}

/// A sum of homogeneous subspaces, identified by its set of grades.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GradeSet {
    bits: u16,
}

impl GradeSet {
    pub const EMPTY: GradeSet = GradeSet { bits: 0 };

    pub fn singleton(k: usize) -> Self {
        GradeSet { bits: 1 << k }
    }

    pub fn full(n: usize) -> Self {
        GradeSet {
            bits: ((1u32 << (n + 1)) - 1) as u16,
        }
    }

    pub fn from_grades<I: IntoIterator<Item = usize>>(grades: I) -> Self {
        let mut bits = 0u16;
        for k in grades {
            bits |= 1 << k;
        }
        GradeSet { bits }
    }

    #[inline]
    pub fn contains(self, k: usize) -> bool {
        k <= MAX_DIM && self.bits & (1 << k) != 0
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.bits == 0
    }

    pub fn insert(&mut self, k: usize) {
        self.bits |= 1 << k;
    }

    pub fn union(self, other: GradeSet) -> GradeSet {
        GradeSet {
            bits: self.bits | other.bits,
        }
    }

    pub fn grades(self) -> impl Iterator<Item = usize> {
        let bits = self.bits;
        (0..=MAX_DIM).filter(move |k| bits & (1 << k) != 0)
    }

    pub fn max_grade(self) -> Option<usize> {
        self.grades().last()
    }

    pub fn validate(self, ctx: &AlgebraContext) -> Result<()> {
        if self.is_empty() || self.max_grade().unwrap() > ctx.dim() {
            Err(Error::BadGradeSet)
        } else {
            Ok(())
        }
    }

    /// Total dimension of the subspace: sum of `C(n, k)` over members.
    pub fn subspace_dim(self, ctx: &AlgebraContext) -> usize {
        self.grades().map(|k| binomial(ctx.dim(), k)).sum()
    }
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc = 1usize;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}
