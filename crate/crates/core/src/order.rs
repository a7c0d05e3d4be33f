//! Finite-rank unital associative algebras over Z given by structure constants.
//!
//! An [`Order`] is a free Z-module on a fixed basis. Elements of `A ⊗ Q` are
//! rational coordinate vectors over that basis; an element lies in the order
//! itself exactly when all of its coordinates are integers.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{Coefficient, ExactRational, IntPolynomial, Polynomial, RatPolynomial};
use crate::matrix::RatMatrix;

/// A faithful representation smaller than the regular one, given by the
/// images of the basis elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NaturalRep {
    dim: usize,
    images: Vec<RatMatrix>,
}

impl NaturalRep {
    pub fn new(dim: usize, images: Vec<RatMatrix>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::EmptyMatrix);
        }
        if let Some(m) = images.iter().find(|m| m.dim() != dim) {
            return Err(Error::DimensionMismatch { expected: dim, found: m.dim() });
        }
        Ok(NaturalRep { dim, images })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn images(&self) -> &[RatMatrix] {
        &self.images
    }

    fn apply(&self, coords: &[ExactRational]) -> RatMatrix {
        let mut acc = RatMatrix::zero(self.dim);
        for (c, m) in coords.iter().zip(&self.images) {
            if !c.is_zero() {
                acc = &acc + &m.scale(c);
            }
        }
        acc
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Order {
    name: String,
    labels: Vec<String>,
    // products[i * rank + j] lists the nonzero (k, c_ijk) with e_i e_j = sum c_ijk e_k
    products: Vec<Vec<(usize, BigInt)>>,
    unity: Vec<BigInt>,
    spectral_degree: usize,
    natural_rep: Option<NaturalRep>,
}

impl Order {
    /// Builds and validates an order. `constants[i][j][k]` is the coefficient
    /// of `e_k` in `e_i * e_j`. Associativity is checked on every basis triple.
    pub fn new(
        name: impl Into<String>,
        labels: Vec<String>,
        constants: Vec<Vec<Vec<BigInt>>>,
        unity: Vec<BigInt>,
    ) -> Result<Self> {
        let r = labels.len();
        if r == 0 {
            return Err(Error::Shape("rank must be positive".into()));
        }
        if unity.len() != r {
            return Err(Error::Shape(format!("unity has {} coordinates, rank is {r}", unity.len())));
        }
        if constants.len() != r {
            return Err(Error::Shape(format!("structure constants have {} slices, rank is {r}", constants.len())));
        }
        let mut products = Vec::with_capacity(r * r);
        for (i, slice) in constants.iter().enumerate() {
            if slice.len() != r {
                return Err(Error::Shape(format!("structure constants [{i}] has {} rows, rank is {r}", slice.len())));
            }
            for (j, row) in slice.iter().enumerate() {
                if row.len() != r {
                    return Err(Error::Shape(format!(
                        "structure constants [{i}][{j}] has {} entries, rank is {r}",
                        row.len()
                    )));
                }
                products.push(
                    row.iter()
                        .enumerate()
                        .filter(|(_, c)| !c.is_zero())
                        .map(|(k, c)| (k, c.clone()))
                        .collect(),
                );
            }
        }
        let order = Order {
            name: name.into(),
            labels,
            products,
            unity,
            spectral_degree: r,
            natural_rep: None,
        };
        order.check_unity()?;
        order.check_associative()?;
        Ok(order)
    }

    fn check_unity(&self) -> Result<()> {
        for b in 0..self.rank() {
            let e = basis_vec::<BigInt>(self.rank(), b);
            if self.mul_coords(&self.unity, &e) != e || self.mul_coords(&e, &self.unity) != e {
                return Err(Error::UnityFailure(b));
            }
        }
        Ok(())
    }

    fn check_associative(&self) -> Result<()> {
        let r = self.rank();
        for i in 0..r {
            let ei = basis_vec::<BigInt>(r, i);
            for j in 0..r {
                let ej = basis_vec::<BigInt>(r, j);
                let eij = self.mul_coords(&ei, &ej);
                for k in 0..r {
                    let ek = basis_vec::<BigInt>(r, k);
                    let left = self.mul_coords(&eij, &ek);
                    let right = self.mul_coords(&ei, &self.mul_coords(&ej, &ek));
                    if left != right {
                        return Err(Error::NonAssociative(i, j, k));
                    }
                }
            }
        }
        Ok(())
    }

    /// Overrides the degree bound `n` of `Λ_n` (defaults to the rank).
    pub fn with_spectral_degree(mut self, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("spectral degree must be positive".into()));
        }
        self.spectral_degree = n;
        Ok(self)
    }

    /// Attaches a natural representation after checking it is a unital
    /// ring homomorphism on the basis.
    pub fn with_natural_rep(mut self, rep: NaturalRep) -> Result<Self> {
        let r = self.rank();
        if rep.images.len() != r {
            return Err(Error::NaturalRep(format!("{} images for rank {r}", rep.images.len())));
        }
        let unity: Vec<ExactRational> = self.unity.iter().cloned().map(BigRational::from_integer).collect();
        if rep.apply(&unity) != RatMatrix::identity(rep.dim) {
            return Err(Error::NaturalRep("unity does not map to the identity".into()));
        }
        for i in 0..r {
            for j in 0..r {
                let prod: Vec<ExactRational> = self
                    .mul_coords(&basis_vec::<BigInt>(r, i), &basis_vec::<BigInt>(r, j))
                    .into_iter()
                    .map(BigRational::from_integer)
                    .collect();
                if &rep.images[i] * &rep.images[j] != rep.apply(&prod) {
                    return Err(Error::NaturalRep(format!("product of basis elements {i} and {j}")));
                }
            }
        }
        self.natural_rep = Some(rep);
        Ok(self)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn unity_coords(&self) -> &[BigInt] {
        &self.unity
    }

    pub fn spectral_degree(&self) -> usize {
        self.spectral_degree
    }

    pub fn natural_rep(&self) -> Option<&NaturalRep> {
        self.natural_rep.as_ref()
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> BigInt {
        self.products[i * self.rank() + j]
            .iter()
            .find(|(kk, _)| *kk == k)
            .map(|(_, c)| c.clone())
            .unwrap_or_default()
    }

    /// Full `r × r × r` table.
    pub fn structure_constants(&self) -> Vec<Vec<Vec<BigInt>>> {
        let r = self.rank();
        (0..r)
            .map(|i| (0..r).map(|j| (0..r).map(|k| self.structure_constant(i, j, k)).collect()).collect())
            .collect()
    }

    /// Bilinear product of coordinate vectors.
    pub fn mul_coords<T: Coefficient>(&self, x: &[T], y: &[T]) -> Vec<T> {
        let r = self.rank();
        let mut out = vec![T::zero(); r];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let xy = xi.clone() * yj.clone();
                for (k, c) in &self.products[i * r + j] {
                    out[*k] = out[*k].clone() + xy.clone() * T::from_integer(c.clone());
                }
            }
        }
        out
    }

    /// `f(x)` on coordinate vectors, Horner's scheme with scalars `c ↦ c·1`.
    pub fn eval_coords<T: Coefficient>(&self, f: &Polynomial<T>, x: &[T]) -> Vec<T> {
        let unity: Vec<T> = self.unity.iter().map(|c| T::from_integer(c.clone())).collect();
        let mut acc = vec![T::zero(); self.rank()];
        for c in f.coeffs().iter().rev() {
            acc = self.mul_coords(&acc, x);
            for (a, u) in acc.iter_mut().zip(&unity) {
                *a = a.clone() + c.clone() * u.clone();
            }
        }
        acc
    }

    /// `g(x) mod q` for integer `g` and integer coordinates, reduced at every step.
    pub fn eval_mod(&self, g: &IntPolynomial, x: &[BigInt], q: &BigInt) -> Vec<BigInt> {
        let mut acc = vec![BigInt::zero(); self.rank()];
        for c in g.coeffs().iter().rev() {
            acc = self.mul_coords(&acc, x);
            for (a, u) in acc.iter_mut().zip(&self.unity) {
                *a = (&*a + c * u).mod_floor(q);
            }
        }
        acc
    }

    /// Looks up a built-in order by name: `integers`, `quadratic(m)`,
    /// `quadratic_half(m)`, `lipschitz`, `hurwitz`, `matrix(k)`, `triangular(k)`.
    pub fn builtin(name: &str) -> Result<Order> {
        let name = name.trim();
        let param = |prefix: &str| -> Option<Result<i64>> {
            let rest = name.strip_prefix(prefix)?.strip_prefix('(')?.strip_suffix(')')?;
            Some(
                rest.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::InvalidParameter(format!("bad parameter in `{name}`"))),
            )
        };
        if let Some(m) = param("quadratic_half") {
            return builtins::quadratic_half(m?);
        }
        if let Some(m) = param("quadratic") {
            return builtins::quadratic(m?);
        }
        if let Some(k) = param("matrix") {
            return builtins::matrix(positive(k?, name)?);
        }
        if let Some(k) = param("triangular") {
            return builtins::triangular(positive(k?, name)?);
        }
        match name {
            "integers" => builtins::integers(),
            "lipschitz" => builtins::lipschitz(),
            "hurwitz" => builtins::hurwitz(),
            _ => Err(Error::UnknownOrder(name.to_string())),
        }
    }
}

fn positive(k: i64, name: &str) -> Result<usize> {
    if k < 1 {
        return Err(Error::InvalidParameter(format!("`{name}` needs a positive size")));
    }
    Ok(k as usize)
}

fn basis_vec<T: Coefficient>(r: usize, i: usize) -> Vec<T> {
    let mut v = vec![T::zero(); r];
    v[i] = T::one();
    v
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (rank {}, basis {})", self.name, self.rank(), self.labels.join(", "))
    }
}

/// An element of `A ⊗ Q`: rational coordinates over the order's basis.
#[derive(Clone, Debug)]
pub struct AlgebraElement {
    order: Arc<Order>,
    coords: Vec<ExactRational>,
}

impl PartialEq for AlgebraElement {
    fn eq(&self, other: &Self) -> bool {
        same_order(&self.order, &other.order) && self.coords == other.coords
    }
}

impl Eq for AlgebraElement {}

fn same_order(a: &Arc<Order>, b: &Arc<Order>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

impl AlgebraElement {
    pub fn new(order: &Arc<Order>, coords: Vec<ExactRational>) -> Result<Self> {
        if coords.len() != order.rank() {
            return Err(Error::DimensionMismatch { expected: order.rank(), found: coords.len() });
        }
        Ok(AlgebraElement { order: order.clone(), coords })
    }

    pub fn from_integers(order: &Arc<Order>, coords: &[BigInt]) -> Result<Self> {
        Self::new(order, coords.iter().cloned().map(BigRational::from_integer).collect())
    }

    pub fn from_i64s(order: &Arc<Order>, coords: &[i64]) -> Result<Self> {
        Self::new(order, coords.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    pub fn unity(order: &Arc<Order>) -> Self {
        Self::from_integers(order, &order.unity).expect("unity has rank coordinates")
    }

    pub fn zero(order: &Arc<Order>) -> Self {
        AlgebraElement { order: order.clone(), coords: vec![BigRational::zero(); order.rank()] }
    }

    pub fn basis(order: &Arc<Order>, i: usize) -> Self {
        AlgebraElement { order: order.clone(), coords: basis_vec(order.rank(), i) }
    }

    /// `c · 1`.
    pub fn scalar(order: &Arc<Order>, c: &ExactRational) -> Self {
        Self::unity(order).scale(c)
    }

    pub fn order(&self) -> &Arc<Order> {
        &self.order
    }

    pub fn coords(&self) -> &[ExactRational] {
        &self.coords
    }

    /// Lies in the order itself, not just in `A ⊗ Q`.
    pub fn is_in_order(&self) -> bool {
        self.coords.iter().all(|c| c.is_integer())
    }

    pub fn integer_coords(&self) -> Option<Vec<BigInt>> {
        self.is_in_order().then(|| self.coords.iter().map(|c| c.to_integer()).collect())
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if !same_order(&self.order, &other.order) {
            return Err(Error::OrderMismatch);
        }
        Ok(())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(AlgebraElement {
            order: self.order.clone(),
            coords: self.order.mul_coords(&self.coords, &other.coords),
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(AlgebraElement {
            order: self.order.clone(),
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(AlgebraElement {
            order: self.order.clone(),
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn scale(&self, c: &ExactRational) -> Self {
        AlgebraElement { order: self.order.clone(), coords: self.coords.iter().map(|x| x * c).collect() }
    }

    /// `f(self)`.
    pub fn eval(&self, f: &RatPolynomial) -> Self {
        AlgebraElement { order: self.order.clone(), coords: self.order.eval_coords(f, &self.coords) }
    }

    /// Matrix of `y ↦ self · y` in the basis, whatever representation the
    /// order prefers otherwise.
    pub fn left_regular_matrix(&self) -> RatMatrix {
        let r = self.order.rank();
        let mut m = RatMatrix::zero(r);
        for (i, xi) in self.coords.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for j in 0..r {
                for (k, c) in &self.order.products[i * r + j] {
                    let v = m.get(*k, j) + xi * BigRational::from_integer(c.clone());
                    m.set(*k, j, v);
                }
            }
        }
        m
    }

    /// Faithful matrix representation: the natural one when the order has
    /// it, otherwise left multiplication on the basis.
    pub fn regular_representation(&self) -> RatMatrix {
        match &self.order.natural_rep {
            Some(rep) => rep.apply(&self.coords),
            None => self.left_regular_matrix(),
        }
    }

    pub fn minimal_polynomial(&self) -> RatPolynomial {
        self.regular_representation().minimal_polynomial()
    }

    pub fn is_integral(&self) -> bool {
        self.minimal_polynomial().has_integer_coeffs()
    }

    /// A rational multiple of the unity.
    pub fn is_scalar(&self) -> bool {
        self.minimal_polynomial().degree() == Some(1)
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// The box `[0, m)^r` of residue representatives for `A / mA`, in
/// lexicographic order (last coordinate varies fastest).
#[derive(Clone, Debug)]
pub struct ResidueBox {
    order: Arc<Order>,
    modulus: u64,
    len: u64,
}

impl ResidueBox {
    pub fn new(order: &Arc<Order>, modulus: u64) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::InvalidParameter("modulus must be at least 1".into()));
        }
        let len = u32::try_from(order.rank())
            .ok()
            .and_then(|r| modulus.checked_pow(r))
            .ok_or_else(|| Error::InvalidParameter(format!("{modulus}^{} residues overflow", order.rank())))?;
        Ok(ResidueBox { order: order.clone(), modulus, len })
    }

    pub fn len(&self) -> u64 {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn order(&self) -> &Arc<Order> {
        &self.order
    }

    pub fn coords_at(&self, mut idx: u64) -> Vec<BigInt> {
        let r = self.order.rank();
        let mut out = vec![BigInt::zero(); r];
        for slot in out.iter_mut().rev() {
            *slot = BigInt::from(idx % self.modulus);
            idx /= self.modulus;
        }
        out
    }

    pub fn element_at(&self, idx: u64) -> AlgebraElement {
        AlgebraElement::from_integers(&self.order, &self.coords_at(idx)).expect("rank coordinates")
    }

    pub fn iter(&self) -> impl Iterator<Item = AlgebraElement> + '_ {
        (0..self.len).map(|i| self.element_at(i))
    }
}

/// All `m^r` coordinate-box representatives of `A / mA`.
pub fn residue_enumeration(order: &Arc<Order>, m: u64) -> Result<impl Iterator<Item = AlgebraElement>> {
    let b = ResidueBox::new(order, m)?;
    Ok((0..b.len).map(move |i| b.element_at(i)))
}

mod builtins {
    use super::*;

    fn table(r: usize, entries: &[(usize, usize, usize, i64)]) -> Vec<Vec<Vec<BigInt>>> {
        let mut c = vec![vec![vec![BigInt::zero(); r]; r]; r];
        for &(i, j, k, v) in entries {
            c[i][j][k] += BigInt::from(v);
        }
        c
    }

    fn labels(ls: &[&str]) -> Vec<String> {
        ls.iter().map(|s| s.to_string()).collect()
    }

    fn unit(r: usize) -> Vec<BigInt> {
        basis_vec(r, 0)
    }

    pub fn integers() -> Result<Order> {
        Order::new("integers", labels(&["1"]), table(1, &[(0, 0, 0, 1)]), unit(1))
    }

    /// `Z[s]` with `s^2 = m`.
    pub fn quadratic(m: i64) -> Result<Order> {
        let c = table(2, &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1), (1, 1, 0, m)]);
        Order::new(format!("quadratic({m})"), labels(&["1", "s"]), c, unit(2))
    }

    /// `Z[t]` with `t = (1 + sqrt(m)) / 2`, so `t^2 = t + (m - 1)/4`.
    pub fn quadratic_half(m: i64) -> Result<Order> {
        if m.mod_floor(&4) != 1 {
            return Err(Error::InvalidParameter(format!("quadratic_half({m}) needs m ≡ 1 mod 4")));
        }
        let c = table(2, &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1), (1, 1, 0, (m - 1) / 4), (1, 1, 1, 1)]);
        Order::new(format!("quadratic_half({m})"), labels(&["1", "t"]), c, unit(2))
    }

    /// Hamilton products of the units 1, i, j, k as (i, j, k, sign) entries.
    pub(super) fn quaternion_table() -> Vec<(usize, usize, usize, i64)> {
        let mut t = Vec::new();
        for a in 0..4 {
            t.push((0, a, a, 1));
            if a > 0 {
                t.push((a, 0, a, 1));
                t.push((a, a, 0, -1));
            }
        }
        // ij = k, jk = i, ki = j and the anticommuting reverses
        for (a, b, c) in [(1, 2, 3), (2, 3, 1), (3, 1, 2)] {
            t.push((a, b, c, 1));
            t.push((b, a, c, -1));
        }
        t
    }

    pub fn lipschitz() -> Result<Order> {
        Order::new("lipschitz", labels(&["1", "i", "j", "k"]), table(4, &quaternion_table()), unit(4))
    }

    /// Hurwitz quaternions on the integral basis `1, i, j, w` with
    /// `w = (1 + i + j + k) / 2`.
    pub fn hurwitz() -> Result<Order> {
        let ambient = Arc::new(lipschitz()?);
        let h = crate::exact::rat(1, 2);
        let one = BigRational::one();
        let zero = BigRational::zero;
        let basis = vec![
            vec![one.clone(), zero(), zero(), zero()],
            vec![zero(), one.clone(), zero(), zero()],
            vec![zero(), zero(), one.clone(), zero()],
            vec![h.clone(), h.clone(), h.clone(), h],
        ];
        sublattice("hurwitz", labels(&["1", "i", "j", "w"]), &ambient, basis)
    }

    /// Order spanned by rational vectors of an ambient algebra, with the
    /// first vector as unity. Fails if the lattice is not multiplicatively
    /// closed.
    fn sublattice(
        name: &str,
        labels: Vec<String>,
        ambient: &Arc<Order>,
        basis: Vec<Vec<ExactRational>>,
    ) -> Result<Order> {
        let r = basis.len();
        // columns of `change` are the basis vectors in ambient coordinates
        let mut change = RatMatrix::zero(r);
        for (j, v) in basis.iter().enumerate() {
            for (i, x) in v.iter().enumerate() {
                change.set(i, j, x.clone());
            }
        }
        let inv = change
            .inverse()
            .ok_or_else(|| Error::Shape(format!("{name}: basis is singular")))?;
        let mut c = vec![vec![vec![BigInt::zero(); r]; r]; r];
        for i in 0..r {
            for j in 0..r {
                let prod = ambient.mul_coords(&basis[i], &basis[j]);
                for (k, x) in inv.apply(&prod).into_iter().enumerate() {
                    if !x.is_integer() {
                        return Err(Error::Shape(format!("{name}: lattice not closed under products")));
                    }
                    c[i][j][k] = x.to_integer();
                }
            }
        }
        let unity: Vec<BigInt> = inv
            .apply(&ambient.unity.iter().cloned().map(BigRational::from_integer).collect::<Vec<_>>())
            .into_iter()
            .map(|x| x.to_integer())
            .collect();
        Order::new(name, labels, c, unity)
    }

    fn matrix_units(k: usize, keep: impl Fn(usize, usize) -> bool) -> Vec<(usize, usize)> {
        (0..k).flat_map(|a| (0..k).map(move |b| (a, b))).filter(|&(a, b)| keep(a, b)).collect()
    }

    fn matrix_like(name: String, k: usize, units: Vec<(usize, usize)>) -> Result<Order> {
        let r = units.len();
        let index = |a: usize, b: usize| units.iter().position(|&u| u == (a, b));
        let mut entries = Vec::new();
        for (i, &(a, b)) in units.iter().enumerate() {
            for (j, &(c, d)) in units.iter().enumerate() {
                if b == c {
                    let target = index(a, d).expect("span closed under products");
                    entries.push((i, j, target, 1));
                }
            }
        }
        let mut unity = vec![BigInt::zero(); r];
        for a in 0..k {
            unity[index(a, a).expect("diagonal units present")] = BigInt::one();
        }
        let labels = units.iter().map(|(a, b)| format!("e{}{}", a + 1, b + 1)).collect();
        let images = units
            .iter()
            .map(|&(a, b)| {
                let mut m = RatMatrix::zero(k);
                m.set(a, b, BigRational::one());
                m
            })
            .collect();
        Order::new(name, labels, table(r, &entries), unity)?
            .with_spectral_degree(k)?
            .with_natural_rep(NaturalRep::new(k, images)?)
    }

    pub fn matrix(k: usize) -> Result<Order> {
        matrix_like(format!("matrix({k})"), k, matrix_units(k, |_, _| true))
    }

    pub fn triangular(k: usize) -> Result<Order> {
        matrix_like(format!("triangular({k})"), k, matrix_units(k, |a, b| a <= b))
    }
}

/// Quaternion coordinates `(q0, q1, q2, q3)` of a Hurwitz-basis coordinate vector.
pub fn hurwitz_to_quaternion(c: &[ExactRational]) -> [ExactRational; 4] {
    let half = &c[3] / BigRational::from_integer(BigInt::from(2));
    [&c[0] + &half, &c[1] + &half, &c[2] + &half, half]
}

/// Hurwitz-basis coordinates of `q0 + q1 i + q2 j + q3 k`.
pub fn quaternion_to_hurwitz(q: &[ExactRational; 4]) -> Vec<ExactRational> {
    let two = BigRational::from_integer(BigInt::from(2));
    vec![&q[0] - &q[3], &q[1] - &q[3], &q[2] - &q[3], &q[3] * two]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    fn shared(name: &str) -> Arc<Order> {
        Arc::new(Order::builtin(name).unwrap())
    }

    fn z(c: &[i64]) -> RatPolynomial {
        RatPolynomial::from_i64s(c)
    }

    fn big(c: &[i64]) -> Vec<BigInt> {
        c.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn integers_and_quadratic_build() {
        let zz = Order::builtin("integers").unwrap();
        assert_eq!(zz.rank(), 1);
        let q = Order::builtin("quadratic(-3)").unwrap();
        assert_eq!(q.structure_constant(1, 1, 0), BigInt::from(-3));
        assert_eq!(q.spectral_degree(), 2);
    }

    #[test]
    fn broken_tables_are_rejected() {
        let mut c = Order::builtin("quadratic(-3)").unwrap().structure_constants();
        // 1 * s = 2s
        c[0][1][1] = BigInt::from(2);
        let err = Order::new("bad", vec!["1".into(), "s".into()], c, big(&[1, 0])).unwrap_err();
        assert_eq!(err, Error::UnityFailure(1));

        // basis (1, x, y) with xx = y, yy = y, yx = x, xy = 0: (xx)x = x but x(xx) = 0
        let c = {
            let mut t = vec![vec![vec![BigInt::zero(); 3]; 3]; 3];
            #[allow(clippy::needless_range_loop)]
            for a in 0..3 {
                t[0][a][a] = BigInt::one();
                t[a][0][a] = BigInt::one();
            }
            t[1][1][2] = BigInt::one();
            t[2][2][2] = BigInt::one();
            t[2][1][1] = BigInt::one();
            t
        };
        let labels = vec!["1".into(), "x".into(), "y".into()];
        let err = Order::new("bad", labels, c, big(&[1, 0, 0])).unwrap_err();
        assert!(matches!(err, Error::NonAssociative(..)), "{err:?}");
    }

    #[test]
    fn shape_errors() {
        let err = Order::new("bad", vec!["1".into()], vec![vec![vec![]]], big(&[1])).unwrap_err();
        assert!(matches!(err, Error::Shape(_)));
        let err = Order::new("bad", vec!["1".into()], vec![vec![vec![BigInt::one()]]], big(&[1, 0])).unwrap_err();
        assert!(matches!(err, Error::Shape(_)));
        assert!(matches!(Order::builtin("octonions"), Err(Error::UnknownOrder(_))));
        assert!(matches!(Order::builtin("quadratic_half(-1)"), Err(Error::InvalidParameter(_))));
        assert!(matches!(Order::builtin("matrix(0)"), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn quaternion_units_multiply() {
        let l = shared("lipschitz");
        let i = AlgebraElement::basis(&l, 1);
        let j = AlgebraElement::basis(&l, 2);
        let k = AlgebraElement::basis(&l, 3);
        assert_eq!(i.mul(&j).unwrap(), k);
        assert_eq!(j.mul(&i).unwrap(), k.scale(&int(-1)));
        let u = AlgebraElement::unity(&l);
        assert_eq!(u.mul(&i).unwrap(), i);
    }

    #[test]
    fn quadratic_generator_squares_to_m() {
        let q = shared("quadratic(-3)");
        let s = AlgebraElement::basis(&q, 1);
        assert_eq!(s.mul(&s).unwrap(), AlgebraElement::scalar(&q, &int(-3)));
        assert_eq!(s.regular_representation(), RatMatrix::from_i64_rows(&[&[0, -3], &[1, 0]]).unwrap());
    }

    #[test]
    fn lipschitz_i_representation() {
        let l = shared("lipschitz");
        let i = AlgebraElement::basis(&l, 1);
        // i*1 = i, i*i = -1, i*j = k, i*k = -j
        let expect = RatMatrix::from_i64_rows(&[&[0, -1, 0, 0], &[1, 0, 0, 0], &[0, 0, 0, -1], &[0, 0, 1, 0]]).unwrap();
        assert_eq!(i.regular_representation(), expect);
        assert_eq!(AlgebraElement::unity(&l).regular_representation(), RatMatrix::identity(4));
    }

    #[test]
    fn hurwitz_basis_is_integral() {
        let h = Order::builtin("hurwitz").unwrap();
        assert_eq!(h.rank(), 4);
        assert_eq!(h.unity_coords(), &big(&[1, 0, 0, 0])[..]);
        // w^2 = w - 1
        let h = Arc::new(h);
        let w = AlgebraElement::basis(&h, 3);
        let expect = w.sub(&AlgebraElement::unity(&h)).unwrap();
        assert_eq!(w.mul(&w).unwrap(), expect);
    }

    #[test]
    fn quaternion_coordinate_conversions() {
        let q = [rat(1, 2), rat(3, 2), rat(-1, 2), rat(5, 2)];
        let c = quaternion_to_hurwitz(&q);
        assert!(c.iter().all(|x| x.is_integer()));
        assert_eq!(hurwitz_to_quaternion(&c), q);
    }

    #[test]
    fn minimal_polynomials_of_elements() {
        let l = shared("lipschitz");
        let alpha = AlgebraElement::new(&l, vec![rat(1, 2); 4]).unwrap();
        assert_eq!(alpha.minimal_polynomial(), z(&[1, -1, 1]));
        assert_eq!(AlgebraElement::unity(&l).minimal_polynomial(), z(&[-1, 1]));

        let h = shared("hurwitz");
        // q = 1 + 2i - j + 3k: X^2 - 2X + 15
        let q = AlgebraElement::new(&h, quaternion_to_hurwitz(&[int(1), int(2), int(-1), int(3)])).unwrap();
        assert_eq!(q.minimal_polynomial(), z(&[15, -2, 1]));
    }

    #[test]
    fn integrality_of_elements() {
        let q = shared("quadratic(-3)");
        let theta = AlgebraElement::new(&q, vec![rat(1, 2), rat(1, 2)]).unwrap();
        assert!(theta.is_integral());
        assert!(!theta.is_in_order());
        assert!(!AlgebraElement::scalar(&q, &rat(1, 2)).is_integral());
        for name in ["integers", "quadratic(-3)", "quadratic_half(-3)", "lipschitz", "hurwitz", "matrix(2)", "triangular(2)"] {
            let o = shared(name);
            for a in residue_enumeration(&o, 3).unwrap() {
                assert!(a.is_integral(), "{name}: {a}");
            }
        }
    }

    #[test]
    fn residue_counts_and_order() {
        let zz = shared("integers");
        let all: Vec<_> = residue_enumeration(&zz, 2).unwrap().collect();
        assert_eq!(all, vec![AlgebraElement::zero(&zz), AlgebraElement::unity(&zz)]);
        assert_eq!(residue_enumeration(&shared("quadratic(-3)"), 2).unwrap().count(), 4);
        assert_eq!(residue_enumeration(&shared("lipschitz"), 2).unwrap().count(), 16);
        let b = ResidueBox::new(&shared("quadratic(-3)"), 3).unwrap();
        assert_eq!(b.coords_at(1), big(&[0, 1]));
        assert_eq!(b.coords_at(5), big(&[1, 2]));
        assert!(ResidueBox::new(&zz, 0).is_err());
    }

    #[test]
    fn matrix_orders_use_natural_rep() {
        let m2 = Order::builtin("matrix(2)").unwrap();
        assert_eq!((m2.rank(), m2.spectral_degree()), (4, 2));
        let m2 = Arc::new(m2);
        let a = AlgebraElement::from_i64s(&m2, &[1, 2, 3, 4]).unwrap();
        let nat = a.regular_representation();
        assert_eq!(nat, RatMatrix::from_i64_rows(&[&[1, 2], &[3, 4]]).unwrap());
        assert_eq!(a.left_regular_matrix().dim(), 4);
        assert_eq!(a.minimal_polynomial(), z(&[-2, -5, 1]));
        let t3 = Order::builtin("triangular(3)").unwrap();
        assert_eq!((t3.rank(), t3.spectral_degree()), (6, 3));
    }

    #[test]
    fn natural_rep_is_validated() {
        let q = Order::builtin("quadratic(-3)").unwrap();
        let wrong = NaturalRep::new(2, vec![RatMatrix::identity(2), RatMatrix::identity(2)]).unwrap();
        assert!(matches!(q.with_natural_rep(wrong), Err(Error::NaturalRep(_))));
    }
}
