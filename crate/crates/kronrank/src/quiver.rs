//! Representations of the r-Kronecker quiver: two vector spaces joined by r
//! parallel linear maps, morphisms as commuting pairs, duality, direct sums,
//! and (in)decomposability machinery.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::{quotient_projection, quotient_section, Field, Matrix, Scalar};

/// Pair of vertex dimensions `(dim M_1, dim M_2)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct DimVector {
    pub d1: usize,
    pub d2: usize,
}

impl DimVector {
    pub fn new(d1: usize, d2: usize) -> DimVector {
        DimVector { d1, d2 }
    }

    pub fn total(&self) -> usize {
        self.d1 + self.d2
    }

    pub fn is_zero(&self) -> bool {
        self.d1 == 0 && self.d2 == 0
    }

    pub fn as_pair(&self) -> (i64, i64) {
        (self.d1 as i64, self.d2 as i64)
    }

    pub fn add(&self, other: DimVector) -> DimVector {
        DimVector::new(self.d1 + other.d1, self.d2 + other.d2)
    }
}

impl fmt::Display for DimVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.d1, self.d2)
    }
}

/// A representation of `Gamma_r`: spaces `k^{d1}`, `k^{d2}` and `r` maps of
/// shape `d2 x d1`, one per arrow.
#[derive(Clone, PartialEq, Eq)]
pub struct KroneckerModule {
    field: Field,
    r: usize,
    dim: DimVector,
    maps: Vec<Matrix>,
}

impl fmt::Debug for KroneckerModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "KroneckerModule(r={}, dim={}, over {})",
            self.r, self.dim, self.field
        )
    }
}

impl KroneckerModule {
    pub fn new(field: Field, r: usize, dim: DimVector, maps: Vec<Matrix>) -> Result<Self> {
        let m = KroneckerModule {
            field,
            r,
            dim,
            maps,
        };
        m.validate()?;
        Ok(m)
    }

    pub fn zero_module(field: Field, r: usize) -> Result<Self> {
        let maps = (0..r).map(|_| Matrix::zero(field, 0, 0)).collect();
        KroneckerModule::new(field, r, DimVector::new(0, 0), maps)
    }

    /// Checks all type invariants, reporting the first violation.
    pub fn validate(&self) -> Result<()> {
        if self.r < 2 {
            return Err(Error::ArrowCountTooSmall(self.r));
        }
        if self.maps.len() != self.r {
            return Err(Error::WrongMapCount {
                expected: self.r,
                got: self.maps.len(),
            });
        }
        for m in &self.maps {
            if m.field() != self.field {
                return Err(Error::FieldMismatch);
            }
            if (m.rows(), m.cols()) != (self.dim.d2, self.dim.d1) {
                return Err(Error::ShapeViolation {
                    context: "arrow map",
                    expected: (self.dim.d2, self.dim.d1),
                    got: (m.rows(), m.cols()),
                });
            }
        }
        Ok(())
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn dim(&self) -> DimVector {
        self.dim
    }

    pub fn total_dim(&self) -> usize {
        self.dim.total()
    }

    pub fn is_zero(&self) -> bool {
        self.dim.is_zero()
    }

    pub fn map(&self, i: usize) -> &Matrix {
        &self.maps[i]
    }

    pub fn maps(&self) -> &[Matrix] {
        &self.maps
    }

    /// The combination `sum_i alpha_i M(gamma_i)` as a `d2 x d1` matrix.
    pub fn arrow_combination(&self, alpha: &[Scalar]) -> Result<Matrix> {
        if alpha.len() != self.r {
            return Err(Error::WrongVectorLength {
                expected: self.r,
                got: alpha.len(),
            });
        }
        let mut acc = Matrix::zero(self.field, self.dim.d2, self.dim.d1);
        for (a, m) in alpha.iter().zip(&self.maps) {
            if !a.is_zero() {
                acc = acc.add(&m.scale(a));
            }
        }
        Ok(acc)
    }

    /// `[M(gamma_1) | ... | M(gamma_r)]`, whose column space is the reached
    /// part of the vertex-2 space.
    pub fn arrows_side_by_side(&self) -> Matrix {
        let refs: Vec<&Matrix> = self.maps.iter().collect();
        if refs.is_empty() {
            return Matrix::zero(self.field, self.dim.d2, 0);
        }
        Matrix::hstack(&refs)
    }

    /// `[M(gamma_1); ...; M(gamma_r)]` stacked vertically.
    pub fn arrows_stacked(&self) -> Matrix {
        let refs: Vec<&Matrix> = self.maps.iter().collect();
        if refs.is_empty() {
            return Matrix::zero(self.field, 0, self.dim.d1);
        }
        Matrix::vstack(&refs)
    }

    pub fn direct_sum(&self, other: &KroneckerModule) -> Result<KroneckerModule> {
        self.compatible(other)?;
        let maps = (0..self.r)
            .map(|i| Matrix::block_diag(self.field, &[&self.maps[i], &other.maps[i]]))
            .collect();
        KroneckerModule::new(self.field, self.r, self.dim.add(other.dim), maps)
    }

    /// Standard duality: swaps the two vertices and transposes every arrow
    /// map, so `dim DM = (d2, d1)` and `D(P_i) = I_i`.
    pub fn dual(&self) -> KroneckerModule {
        let maps = self.maps.iter().map(Matrix::transpose).collect();
        KroneckerModule {
            field: self.field,
            r: self.r,
            dim: DimVector::new(self.dim.d2, self.dim.d1),
            maps,
        }
    }

    pub(crate) fn compatible(&self, other: &KroneckerModule) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.r != other.r {
            return Err(Error::ArrowCountMismatch(self.r, other.r));
        }
        Ok(())
    }

    /// Restricts the structure maps to a subrepresentation spanned by the
    /// given column bases (one per vertex). Errors if the spans are not
    /// actually invariant.
    pub fn submodule_on_bases(&self, basis1: &Matrix, basis2: &Matrix) -> Result<KroneckerModule> {
        let s1 = basis1.cols();
        let s2 = basis2.cols();
        let mut maps = Vec::with_capacity(self.r);
        for m in &self.maps {
            let image = m.mul(basis1);
            match basis2.solve(&image)? {
                Some(x) => maps.push(x),
                None => {
                    return Err(Error::Invalid(
                        "spans are not closed under the arrow maps".into(),
                    ))
                }
            }
        }
        KroneckerModule::new(self.field, self.r, DimVector::new(s1, s2), maps)
    }
}

/// A morphism of representations: `f1` at vertex 1 and `f2` at vertex 2 with
/// `target.map(i) * f1 = f2 * source.map(i)` for every arrow.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Morphism {
    source: KroneckerModule,
    target: KroneckerModule,
    f1: Matrix,
    f2: Matrix,
}

impl Morphism {
    pub fn new(
        source: KroneckerModule,
        target: KroneckerModule,
        f1: Matrix,
        f2: Matrix,
    ) -> Result<Morphism> {
        source.compatible(&target)?;
        if (f1.rows(), f1.cols()) != (target.dim().d1, source.dim().d1) {
            return Err(Error::ShapeViolation {
                context: "morphism vertex-1 component",
                expected: (target.dim().d1, source.dim().d1),
                got: (f1.rows(), f1.cols()),
            });
        }
        if (f2.rows(), f2.cols()) != (target.dim().d2, source.dim().d2) {
            return Err(Error::ShapeViolation {
                context: "morphism vertex-2 component",
                expected: (target.dim().d2, source.dim().d2),
                got: (f2.rows(), f2.cols()),
            });
        }
        let m = Morphism {
            source,
            target,
            f1,
            f2,
        };
        for i in 0..m.source.r() {
            if m.target.map(i).mul(&m.f1) != m.f2.mul(m.source.map(i)) {
                return Err(Error::Invalid(format!(
                    "commuting square fails at arrow {i}"
                )));
            }
        }
        Ok(m)
    }

    pub fn identity(m: &KroneckerModule) -> Morphism {
        Morphism {
            source: m.clone(),
            target: m.clone(),
            f1: Matrix::identity(m.field(), m.dim().d1),
            f2: Matrix::identity(m.field(), m.dim().d2),
        }
    }

    pub fn source(&self) -> &KroneckerModule {
        &self.source
    }

    pub fn target(&self) -> &KroneckerModule {
        &self.target
    }

    pub fn f1(&self) -> &Matrix {
        &self.f1
    }

    pub fn f2(&self) -> &Matrix {
        &self.f2
    }

    pub fn is_zero(&self) -> bool {
        self.f1.is_zero() && self.f2.is_zero()
    }

    pub fn is_injective(&self) -> bool {
        self.f1.has_full_column_rank() && self.f2.has_full_column_rank()
    }

    pub fn is_surjective(&self) -> bool {
        self.f1.rank() == self.target.dim().d1 && self.f2.rank() == self.target.dim().d2
    }

    pub fn is_invertible(&self) -> bool {
        self.f1.is_invertible() && self.f2.is_invertible()
    }

    pub fn compose(&self, inner: &Morphism) -> Result<Morphism> {
        Morphism::new(
            inner.source.clone(),
            self.target.clone(),
            self.f1.mul(&inner.f1),
            self.f2.mul(&inner.f2),
        )
    }

    /// Kernel subrepresentation together with its inclusion.
    pub fn kernel(&self) -> (KroneckerModule, Morphism) {
        let k1 = self.f1.kernel_basis();
        let k2 = self.f2.kernel_basis();
        let module = self
            .source
            .submodule_on_bases(&k1, &k2)
            .expect("kernel spans are arrow-invariant");
        let inc = Morphism::new(module.clone(), self.source.clone(), k1, k2)
            .expect("kernel inclusion commutes");
        (module, inc)
    }

    /// Cokernel representation together with the projection onto it.
    pub fn cokernel(&self) -> (KroneckerModule, Morphism) {
        let field = self.source.field();
        // Quotient coordinates on the complement of the image at each vertex.
        let im1 = self.f1.transpose();
        let im2 = self.f2.transpose();
        let q1 = quotient_projection(&im1);
        let q2 = quotient_projection(&im2);
        let s1 = quotient_section(&im1);
        let maps: Vec<Matrix> = (0..self.target.r())
            .map(|i| q2.mul(self.target.map(i)).mul(&s1))
            .collect();
        let module = KroneckerModule::new(
            field,
            self.target.r(),
            DimVector::new(q1.rows(), q2.rows()),
            maps,
        )
        .expect("cokernel maps are well defined");
        let proj = Morphism::new(self.target.clone(), module.clone(), q1, q2)
            .expect("cokernel projection commutes");
        (module, proj)
    }
}

/// Dimension of `Hom(M, N)` as the nullity of the commuting-square system;
/// avoids materializing basis morphisms.
pub fn hom_dim(m: &KroneckerModule, n: &KroneckerModule) -> Result<usize> {
    m.compatible(n)?;
    let sys = hom_system(m, n);
    Ok(sys.cols() - sys.rank())
}

/// Basis of `Hom(M, N)` as explicit morphisms.
pub fn hom_basis(m: &KroneckerModule, n: &KroneckerModule) -> Result<Vec<Morphism>> {
    m.compatible(n)?;
    let sys = hom_system(m, n);
    let kernel = sys.kernel_basis();
    let mut out = Vec::with_capacity(kernel.cols());
    for j in 0..kernel.cols() {
        let (f1, f2) = unflatten(m, n, &kernel.column(j));
        out.push(Morphism::new(m.clone(), n.clone(), f1, f2).expect("solution satisfies squares"));
    }
    Ok(out)
}

/// The linear system whose kernel is `Hom(M, N)`: unknowns are the entries of
/// `f1 (n1 x m1)` then `f2 (n2 x m2)`, row-major; one equation per arrow and
/// per entry of the `n2 x m1` commuting square.
fn hom_system(m: &KroneckerModule, n: &KroneckerModule) -> Matrix {
    let field = m.field();
    let (m1, m2) = (m.dim().d1, m.dim().d2);
    let (n1, n2) = (n.dim().d1, n.dim().d2);
    let unknowns = n1 * m1 + n2 * m2;
    let rows = m.r() * n2 * m1;
    let mut sys = Matrix::zero(field, rows, unknowns);
    let mut row = 0;
    for i in 0..m.r() {
        let nm = n.map(i);
        let mm = m.map(i);
        for a in 0..n2 {
            for b in 0..m1 {
                // sum_c N(i)[a,c] f1[c,b] - sum_d f2[a,d] M(i)[d,b] = 0
                for c in 0..n1 {
                    let coeff = nm.get(a, c).clone();
                    if !coeff.is_zero() {
                        sys.set(row, c * m1 + b, coeff);
                    }
                }
                for d in 0..m2 {
                    let coeff = field.neg(mm.get(d, b));
                    if !coeff.is_zero() {
                        sys.set(row, n1 * m1 + a * m2 + d, coeff);
                    }
                }
                row += 1;
            }
        }
    }
    sys
}

fn unflatten(m: &KroneckerModule, n: &KroneckerModule, v: &Matrix) -> (Matrix, Matrix) {
    let field = m.field();
    let (m1, m2) = (m.dim().d1, m.dim().d2);
    let (n1, n2) = (n.dim().d1, n.dim().d2);
    let f1 = Matrix::from_fn(field, n1, m1, |c, b| v.get(c * m1 + b, 0).clone());
    let f2 = Matrix::from_fn(field, n2, m2, |a, d| v.get(n1 * m1 + a * m2 + d, 0).clone());
    (f1, f2)
}

/// Seeded random module generator shared by tests, examples and fixtures.
pub fn random_module<R: Rng>(
    field: Field,
    r: usize,
    max_d1: usize,
    max_d2: usize,
    rng: &mut R,
) -> KroneckerModule {
    let d1 = rng.gen_range(0..=max_d1);
    let d2 = rng.gen_range(0..=max_d2);
    let (d1, d2) = if d1 + d2 == 0 { (1, 1) } else { (d1, d2) };
    let maps = (0..r)
        .map(|_| Matrix::from_fn(field, d2, d1, |_, _| field.random(rng)))
        .collect();
    KroneckerModule::new(field, r, DimVector::new(d1, d2), maps).expect("shapes are consistent")
}

/// Outcome of the isomorphism test. `No` verdicts are certified; `Yes`
/// carries an invertible witness.
#[derive(Clone, Debug)]
pub enum IsoVerdict {
    Yes(Morphism),
    No(NonIsoReason),
    Undetermined,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NonIsoReason {
    DimensionMismatch,
    HomDimensionMismatch { forward: usize, backward: usize },
    EndDimensionMismatch { left: usize, right: usize },
    ZeroHom,
    NoInvertibleHom,
}

impl IsoVerdict {
    pub fn is_yes(&self) -> bool {
        matches!(self, IsoVerdict::Yes(_))
    }

    pub fn is_no(&self) -> bool {
        matches!(self, IsoVerdict::No(_))
    }
}

const ISO_RANDOM_ROUNDS: usize = 64;
const EXHAUSTIVE_COMBO_BUDGET: u128 = 1 << 16;

/// Searches for an invertible morphism. Certified `No` when dimension data
/// already separates the modules, when the Hom space vanishes, or when a
/// full enumeration of a small Hom space over `F_q` finds nothing invertible.
pub fn is_isomorphic(m: &KroneckerModule, n: &KroneckerModule, seed: u64) -> Result<IsoVerdict> {
    m.compatible(n)?;
    if m.dim() != n.dim() {
        return Ok(IsoVerdict::No(NonIsoReason::DimensionMismatch));
    }
    if m.is_zero() {
        return Ok(IsoVerdict::Yes(Morphism::identity(m)));
    }
    let forward = hom_basis(m, n)?;
    let backward_dim = hom_dim(n, m)?;
    if forward.len() != backward_dim {
        return Ok(IsoVerdict::No(NonIsoReason::HomDimensionMismatch {
            forward: forward.len(),
            backward: backward_dim,
        }));
    }
    if forward.is_empty() {
        return Ok(IsoVerdict::No(NonIsoReason::ZeroHom));
    }
    let end_m = hom_dim(m, m)?;
    let end_n = hom_dim(n, n)?;
    if end_m != end_n {
        return Ok(IsoVerdict::No(NonIsoReason::EndDimensionMismatch {
            left: end_m,
            right: end_n,
        }));
    }
    for f in &forward {
        if f.is_invertible() {
            return Ok(IsoVerdict::Yes(f.clone()));
        }
    }
    let field = m.field();
    if let Field::Prime(p) = field {
        let combos = (p as u128).checked_pow(forward.len() as u32);
        if let Some(c) = combos {
            if c <= EXHAUSTIVE_COMBO_BUDGET {
                return Ok(exhaustive_iso_search(m, n, &forward, p));
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..ISO_RANDOM_ROUNDS {
        if let Some(f) = random_combination(m, n, &forward, &mut rng) {
            if f.is_invertible() {
                return Ok(IsoVerdict::Yes(f));
            }
        }
    }
    Ok(IsoVerdict::Undetermined)
}

fn exhaustive_iso_search(
    m: &KroneckerModule,
    n: &KroneckerModule,
    basis: &[Morphism],
    p: u64,
) -> IsoVerdict {
    let h = basis.len();
    let mut coeffs = vec![0u64; h];
    loop {
        // advance odometer
        let mut i = 0;
        loop {
            if i == h {
                return IsoVerdict::No(NonIsoReason::NoInvertibleHom);
            }
            coeffs[i] += 1;
            if coeffs[i] < p {
                break;
            }
            coeffs[i] = 0;
            i += 1;
        }
        let scalars: Vec<Scalar> = coeffs.iter().map(|&c| Scalar::Fp(c)).collect();
        let f = combine(m, n, basis, &scalars);
        if f.is_invertible() {
            return IsoVerdict::Yes(f);
        }
    }
}

fn combine(
    m: &KroneckerModule,
    n: &KroneckerModule,
    basis: &[Morphism],
    coeffs: &[Scalar],
) -> Morphism {
    let field = m.field();
    let mut f1 = Matrix::zero(field, n.dim().d1, m.dim().d1);
    let mut f2 = Matrix::zero(field, n.dim().d2, m.dim().d2);
    for (c, b) in coeffs.iter().zip(basis) {
        if !c.is_zero() {
            f1 = f1.add(&b.f1().scale(c));
            f2 = f2.add(&b.f2().scale(c));
        }
    }
    Morphism {
        source: m.clone(),
        target: n.clone(),
        f1,
        f2,
    }
}

fn random_combination<R: Rng>(
    m: &KroneckerModule,
    n: &KroneckerModule,
    basis: &[Morphism],
    rng: &mut R,
) -> Option<Morphism> {
    let field = m.field();
    let coeffs: Vec<Scalar> = (0..basis.len()).map(|_| field.random(rng)).collect();
    if coeffs.iter().all(Scalar::is_zero) {
        return None;
    }
    Some(combine(m, n, basis, &coeffs))
}

/// Outcome of the indecomposability test. `Decomposable` carries an explicit
/// direct-sum splitting; `Indecomposable` is certified.
#[derive(Clone, Debug)]
pub enum IndecVerdict {
    Decomposable(KroneckerModule, KroneckerModule),
    Indecomposable,
    ProbablyIndecomposable,
}

impl IndecVerdict {
    pub fn is_indecomposable_or_probably(&self) -> bool {
        matches!(
            self,
            IndecVerdict::Indecomposable | IndecVerdict::ProbablyIndecomposable
        )
    }
}

const FITTING_ROUNDS: usize = 32;

/// Decides indecomposability. A brick (`dim End = 1`) is certified directly.
/// Otherwise seeded Fitting decompositions of random endomorphisms look for a
/// splitting; over a small finite field a full idempotent sweep of `End(M)`
/// then certifies the answer, since a nontrivial idempotent exists iff the
/// module splits. Verdicts never upgrade "probably" to "certainly".
pub fn is_indecomposable(m: &KroneckerModule, seed: u64) -> Result<IndecVerdict> {
    if m.is_zero() {
        return Err(Error::ZeroModule);
    }
    let endos = hom_basis(m, m)?;
    if endos.len() == 1 {
        return Ok(IndecVerdict::Indecomposable);
    }
    let n = m.total_dim();
    for e in &endos {
        if let Some(split) = fitting_split(m, e, n) {
            return Ok(split);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..FITTING_ROUNDS {
        if let Some(e) = random_combination(m, m, &endos, &mut rng) {
            if let Some(split) = fitting_split(m, &e, n) {
                return Ok(split);
            }
        }
    }
    if let Field::Prime(p) = m.field() {
        if let Some(c) = (p as u128).checked_pow(endos.len() as u32) {
            if c <= EXHAUSTIVE_COMBO_BUDGET {
                return Ok(idempotent_sweep(m, &endos, p));
            }
        }
    }
    Ok(IndecVerdict::ProbablyIndecomposable)
}

/// Fitting lemma: for an endomorphism `e` and `n = dim M`, the stable power
/// `e^n` splits `M = im(e^n) (+) ker(e^n)`; nontrivial when `e^n` is neither
/// zero nor invertible.
fn fitting_split(m: &KroneckerModule, e: &Morphism, n: usize) -> Option<IndecVerdict> {
    let p1 = e.f1().pow(n.max(1));
    let p2 = e.f2().pow(n.max(1));
    let r1 = p1.rank();
    let r2 = p2.rank();
    let (d1, d2) = (m.dim().d1, m.dim().d2);
    if (r1 + r2) == 0 || (r1 == d1 && r2 == d2) {
        return None;
    }
    let im1 = p1.column_space_basis();
    let im2 = p2.column_space_basis();
    let ker1 = p1.kernel_basis();
    let ker2 = p2.kernel_basis();
    let image_part = m.submodule_on_bases(&im1, &im2).ok()?;
    let kernel_part = m.submodule_on_bases(&ker1, &ker2).ok()?;
    Some(IndecVerdict::Decomposable(image_part, kernel_part))
}

fn idempotent_sweep(m: &KroneckerModule, endos: &[Morphism], p: u64) -> IndecVerdict {
    let h = endos.len();
    let mut coeffs = vec![0u64; h];
    let id = Morphism::identity(m);
    loop {
        let mut i = 0;
        loop {
            if i == h {
                return IndecVerdict::Indecomposable;
            }
            coeffs[i] += 1;
            if coeffs[i] < p {
                break;
            }
            coeffs[i] = 0;
            i += 1;
        }
        let scalars: Vec<Scalar> = coeffs.iter().map(|&c| Scalar::Fp(c)).collect();
        let e = combine(m, m, endos, &scalars);
        if e.is_zero() || (e.f1() == id.f1() && e.f2() == id.f2()) {
            continue;
        }
        let sq1 = e.f1().mul(e.f1());
        let sq2 = e.f2().mul(e.f2());
        if &sq1 == e.f1() && &sq2 == e.f2() {
            let image_part = m
                .submodule_on_bases(&e.f1().column_space_basis(), &e.f2().column_space_basis())
                .expect("idempotent image is a subrepresentation");
            let kernel_part = m
                .submodule_on_bases(&e.f1().kernel_basis(), &e.f2().kernel_basis())
                .expect("idempotent kernel is a subrepresentation");
            return IndecVerdict::Decomposable(image_part, kernel_part);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grassmann::Subspace;
    use crate::test_modules::{projective, ringel_e, x_u_module};

    fn f5() -> Field {
        Field::prime(5).unwrap()
    }

    fn span(field: Field, r: usize, rows: &[i64]) -> Subspace {
        let d = rows.len() / r;
        Subspace::from_spanning_rows(Matrix::from_int_rows(field, d, r, rows)).unwrap()
    }

    #[test]
    fn validate_catches_bad_shapes_and_small_r() {
        let f = f5();
        let p2 = projective(f, 3, 2).unwrap();
        assert!(p2.validate().is_ok());

        let bad = KroneckerModule::new(
            f,
            3,
            DimVector::new(1, 3),
            vec![
                Matrix::zero(f, 3, 1),
                Matrix::zero(f, 2, 1),
                Matrix::zero(f, 3, 1),
            ],
        );
        assert!(matches!(bad, Err(Error::ShapeViolation { .. })));

        let too_small =
            KroneckerModule::new(f, 1, DimVector::new(0, 0), vec![Matrix::zero(f, 0, 0)]);
        assert!(matches!(too_small, Err(Error::ArrowCountTooSmall(1))));
    }

    #[test]
    fn hom_between_projectives() {
        let f = f5();
        let p1 = projective(f, 3, 1).unwrap();
        let p2 = projective(f, 3, 2).unwrap();
        assert_eq!(hom_dim(&p1, &p2).unwrap(), 3);
        assert_eq!(hom_dim(&p2, &p1).unwrap(), 0);
        let basis = hom_basis(&p1, &p2).unwrap();
        assert_eq!(basis.len(), 3);
    }

    #[test]
    fn hom_from_test_module_to_ringel_module() {
        let f = f5();
        let e = ringel_e(f).unwrap();
        let w = span(f, 3, &[0, 1, 0]);
        let v = span(f, 3, &[1, 0, 0]);
        let xw = x_u_module(&w).unwrap();
        let xv = x_u_module(&v).unwrap();
        assert_eq!(hom_dim(&xw.module, &e).unwrap(), 1);
        assert_eq!(hom_dim(&xv.module, &e).unwrap(), 0);
    }

    #[test]
    fn endomorphisms_contain_the_identity() {
        let f = f5();
        let e = ringel_e(f).unwrap();
        assert!(hom_dim(&e, &e).unwrap() >= 1);
        assert_eq!(hom_dim(&e, &e).unwrap(), 1);
    }

    #[test]
    fn direct_sum_dimensions_and_hom_additivity() {
        let f = f5();
        let p1 = projective(f, 3, 1).unwrap();
        let p2 = projective(f, 3, 2).unwrap();
        let zero = KroneckerModule::zero_module(f, 3).unwrap();
        let s = p2.direct_sum(&zero).unwrap();
        assert!(is_isomorphic(&s, &p2, 0).unwrap().is_yes());

        let sum = p1.direct_sum(&p2).unwrap();
        assert_eq!(sum.dim(), DimVector::new(1, 4));
        let e = ringel_e(f).unwrap();
        assert_eq!(
            hom_dim(&sum, &e).unwrap(),
            hom_dim(&p1, &e).unwrap() + hom_dim(&p2, &e).unwrap()
        );
    }

    #[test]
    fn duality_swaps_projectives_and_injectives() {
        let f = f5();
        let p1 = projective(f, 3, 1).unwrap();
        let p2 = projective(f, 3, 2).unwrap();
        assert_eq!(p1.dual().dim(), DimVector::new(1, 0));
        assert_eq!(p2.dual().dim(), DimVector::new(3, 1));
        let e = ringel_e(f).unwrap();
        assert!(is_isomorphic(&e.dual().dual(), &e, 0).unwrap().is_yes());
    }

    #[test]
    fn hom_is_duality_symmetric() {
        let f = f5();
        let e = ringel_e(f).unwrap();
        let p2 = projective(f, 3, 2).unwrap();
        assert_eq!(
            hom_dim(&p2, &e).unwrap(),
            hom_dim(&e.dual(), &p2.dual()).unwrap()
        );
    }

    #[test]
    fn iso_verdicts() {
        let f = f5();
        let e = ringel_e(f).unwrap();
        assert!(is_isomorphic(&e, &e, 0).unwrap().is_yes());

        let p1 = projective(f, 3, 1).unwrap();
        let p2 = projective(f, 3, 2).unwrap();
        assert!(matches!(
            is_isomorphic(&p1, &p2, 0).unwrap(),
            IsoVerdict::No(NonIsoReason::DimensionMismatch)
        ));

        let u = span(f, 3, &[1, 0, 0, 0, 1, 0]);
        let v = span(f, 3, &[1, 0, 0, 0, 0, 1]);
        let xu = x_u_module(&u).unwrap().module;
        let xv = x_u_module(&v).unwrap().module;
        assert!(is_isomorphic(&xu, &xv, 0).unwrap().is_no());
    }

    #[test]
    fn indecomposability_verdicts() {
        let f = f5();
        let e = ringel_e(f).unwrap();
        assert!(matches!(
            is_indecomposable(&e, 0).unwrap(),
            IndecVerdict::Indecomposable
        ));

        let dbl = e.direct_sum(&e).unwrap();
        match is_indecomposable(&dbl, 0).unwrap() {
            IndecVerdict::Decomposable(a, b) => {
                assert_eq!(a.dim().add(b.dim()), dbl.dim());
            }
            other => panic!("expected a splitting, got {other:?}"),
        }

        let u = span(f, 3, &[0, 1, 0]);
        let xu = x_u_module(&u).unwrap().module;
        assert!(matches!(
            is_indecomposable(&xu, 0).unwrap(),
            IndecVerdict::Indecomposable
        ));

        assert!(is_indecomposable(&KroneckerModule::zero_module(f, 3).unwrap(), 0).is_err());
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn arb_module(r: usize, max: usize) -> impl Strategy<Value = KroneckerModule> {
            (1..=max, 1..=max).prop_flat_map(move |(d1, d2)| {
                proptest::collection::vec(0i64..5, r * d1 * d2).prop_map(move |data| {
                    let f = Field::Prime(5);
                    let maps = (0..r)
                        .map(|i| {
                            Matrix::from_int_rows(f, d2, d1, &data[i * d1 * d2..(i + 1) * d1 * d2])
                        })
                        .collect();
                    KroneckerModule::new(f, r, DimVector::new(d1, d2), maps).unwrap()
                })
            })
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(24))]

            #[test]
            fn hom_dimensions_are_duality_symmetric(
                m in arb_module(3, 3),
                n in arb_module(3, 3),
            ) {
                prop_assert_eq!(
                    hom_dim(&m, &n).unwrap(),
                    hom_dim(&n.dual(), &m.dual()).unwrap()
                );
            }

            #[test]
            fn hom_is_additive_over_direct_sums(
                a in arb_module(3, 2),
                b in arb_module(3, 2),
                c in arb_module(3, 2),
            ) {
                let sum = a.direct_sum(&b).unwrap();
                prop_assert_eq!(
                    hom_dim(&sum, &c).unwrap(),
                    hom_dim(&a, &c).unwrap() + hom_dim(&b, &c).unwrap()
                );
            }

            #[test]
            fn every_hom_basis_element_satisfies_the_squares(
                m in arb_module(3, 2),
                n in arb_module(3, 2),
            ) {
                // Morphism::new re-checks the commuting squares; a violation
                // would make hom_basis fail loudly.
                let basis = hom_basis(&m, &n).unwrap();
                prop_assert_eq!(basis.len(), hom_dim(&m, &n).unwrap());
            }
        }
    }

    #[test]
    fn kernel_and_cokernel_are_exact_ends() {
        let f = f5();
        let p1 = projective(f, 3, 1).unwrap();
        let p2 = projective(f, 3, 2).unwrap();
        let basis = hom_basis(&p1, &p2).unwrap();
        let f0 = &basis[0];
        let (ker, inc) = f0.kernel();
        assert_eq!(ker.dim(), DimVector::new(0, 0));
        assert!(inc.is_injective());
        let (coker, proj) = f0.cokernel();
        assert_eq!(coker.dim(), DimVector::new(1, 2));
        assert!(proj.is_surjective());
        let composite = proj.compose(f0).unwrap();
        assert!(composite.is_zero());
    }
}
