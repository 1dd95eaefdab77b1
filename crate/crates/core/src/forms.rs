//! Integral forms of `ℚ[h_r]`: their bases, coordinates, membership and lattices.

use crate::commutative::{named_series, NamedSeries};
use crate::error::{Error, Result};
use crate::linalg::{inverse, rank, vec_mat, Lattice, Matrix};
use crate::partition::{partitions, Partition};
use crate::poly::GradedPolynomial;
use crate::rational::{is_integer, Q};
use num_traits::Zero;
use rayon::prelude::*;
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BasisKind {
    /// `∏ λ_m(ĥ_{k_m})`.
    BLambda,
    /// `∏_{m odd} λ_m(ĥ_{k_m}) ∏_{m even} λ_m(ȟ_{k_m})`.
    BLambdaPrime,
    /// `∏ ĥ_k^{ε_k} ∏ h̄_{2j}^{d_j}` with `ε_k ∈ {0,1}`.
    BQpol,
    Monomial,
    /// Monomials in the `ȟ_k`.
    CheckMonomial,
    /// `∏ λ_{2m}(ȟ_{k_m})`, spanning the even-index subalgebra.
    BarLambda,
}

impl BasisKind {
    pub const ALL: [BasisKind; 6] = [
        BasisKind::BLambda,
        BasisKind::BLambdaPrime,
        BasisKind::BQpol,
        BasisKind::Monomial,
        BasisKind::CheckMonomial,
        BasisKind::BarLambda,
    ];
}

impl fmt::Display for BasisKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BasisKind::BLambda => "b_lambda",
            BasisKind::BLambdaPrime => "b_lambda_prime",
            BasisKind::BQpol => "b_qpol",
            BasisKind::Monomial => "monomial",
            BasisKind::CheckMonomial => "check_monomial",
            BasisKind::BarLambda => "bar_lambda",
        })
    }
}

impl FromStr for BasisKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        BasisKind::ALL
            .into_iter()
            .find(|k| k.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse { pos: 0, msg: format!("unknown basis `{s}`") })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FormKind {
    /// `ℤ[ĥ_r]`.
    Sym,
    /// Generated by `ĥ_r` and `h̄_r`.
    Mix,
    /// `ℤ[ȟ_r]`.
    CheckForm,
    /// `ℤ[h̄_{2r}]`.
    Bar,
}

impl FormKind {
    pub const ALL: [FormKind; 4] = [FormKind::Sym, FormKind::Mix, FormKind::CheckForm, FormKind::Bar];

    pub fn basis_kind(self) -> BasisKind {
        match self {
            FormKind::Sym => BasisKind::BLambda,
            FormKind::Mix => BasisKind::BLambdaPrime,
            FormKind::CheckForm => BasisKind::CheckMonomial,
            FormKind::Bar => BasisKind::BarLambda,
        }
    }
}

impl fmt::Display for FormKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FormKind::Sym => "sym",
            FormKind::Mix => "mix",
            FormKind::CheckForm => "check",
            FormKind::Bar => "bar",
        })
    }
}

impl FromStr for FormKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        FormKind::ALL
            .into_iter()
            .find(|k| k.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse { pos: 0, msg: format!("unknown form `{s}`") })
    }
}

/// The data defining a basis element.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BasisIndex {
    /// The map `m ↦ k_m` written as a partition with part `m` of multiplicity `k_m`,
    /// or the exponents of a monomial.
    Map(Partition),
    /// `ε` as a set of distinct parts and `d` as a partition into even parts.
    Qpol { eps: Partition, bar: Partition },
}

impl fmt::Display for BasisIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisIndex::Map(p) => write!(f, "{p}"),
            BasisIndex::Qpol { eps, bar } => write!(f, "eps={eps} d={bar}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisElement {
    pub index: BasisIndex,
    pub poly: GradedPolynomial,
}

struct Generators {
    hat: Vec<GradedPolynomial>,
    check: Vec<GradedPolynomial>,
    bar: Vec<GradedPolynomial>,
}

impl Generators {
    fn new(d: usize) -> Self {
        Generators {
            hat: named_series(NamedSeries::Hat, d).into_coeffs(),
            check: named_series(NamedSeries::Check, d).into_coeffs(),
            bar: named_series(NamedSeries::Bar, d).into_coeffs(),
        }
    }
}

fn lambda_product(p: &Partition, f: impl Fn(u32, u32) -> GradedPolynomial) -> GradedPolynomial {
    p.multiplicities().iter().fold(GradedPolynomial::one(), |acc, &(m, k)| acc * &f(m, k))
}

/// All degree-`d` basis elements, sorted by index.
pub fn enumerate_basis(kind: BasisKind, d: u32) -> Vec<BasisElement> {
    let g = Generators::new(d as usize);
    let du = |k: u32| k as usize;
    let mut out: Vec<BasisElement> = match kind {
        BasisKind::BLambda => partitions(d)
            .into_iter()
            .map(|p| {
                let poly = lambda_product(&p, |m, k| g.hat[du(k)].lambda_shift(m));
                BasisElement { index: BasisIndex::Map(p), poly }
            })
            .collect(),
        BasisKind::BLambdaPrime => partitions(d)
            .into_iter()
            .map(|p| {
                let poly =
                    lambda_product(&p, |m, k| if m % 2 == 1 { g.hat[du(k)].lambda_shift(m) } else { g.check[du(k)].lambda_shift(m) });
                BasisElement { index: BasisIndex::Map(p), poly }
            })
            .collect(),
        BasisKind::BQpol => (0..=d / 2)
            .flat_map(|half| {
                let g = &g;
                partitions(d - 2 * half).into_iter().filter(Partition::has_distinct_parts).flat_map(move |eps| {
                    partitions(half).into_iter().map(move |b| {
                        let bar = b.scale_parts(2);
                        let hat_part = eps.parts().fold(GradedPolynomial::one(), |acc, k| acc * &g.hat[du(k)]);
                        let poly = bar.parts().fold(hat_part, |acc, k| acc * &g.bar[du(k)]);
                        BasisElement { index: BasisIndex::Qpol { eps: eps.clone(), bar }, poly }
                    })
                })
            })
            .collect(),
        BasisKind::Monomial => partitions(d)
            .into_iter()
            .map(|p| BasisElement { poly: GradedPolynomial::monomial(p.clone(), Q::from_integer(1.into())), index: BasisIndex::Map(p) })
            .collect(),
        BasisKind::CheckMonomial => partitions(d)
            .into_iter()
            .map(|p| {
                let poly = p.parts().fold(GradedPolynomial::one(), |acc, k| acc * &g.check[du(k)]);
                BasisElement { index: BasisIndex::Map(p), poly }
            })
            .collect(),
        BasisKind::BarLambda => {
            if d % 2 == 1 {
                Vec::new()
            } else {
                partitions(d / 2)
                    .into_iter()
                    .map(|p| {
                        let poly = lambda_product(&p, |m, k| g.check[du(k)].lambda_shift(2 * m));
                        BasisElement { index: BasisIndex::Map(p), poly }
                    })
                    .collect()
            }
        }
    };
    out.sort_by(|a, b| a.index.cmp(&b.index));
    out
}

/// Monomials of degree `d` in their canonical order, with lookup.
#[derive(Clone, Debug)]
pub struct MonomialSpace {
    pub monomials: Vec<Partition>,
    position: HashMap<Partition, usize>,
}

impl MonomialSpace {
    pub fn new(d: u32) -> Self {
        let monomials = partitions(d);
        let position = monomials.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        MonomialSpace { monomials, position }
    }

    pub fn dim(&self) -> usize {
        self.monomials.len()
    }

    /// Dense coordinates of a homogeneous polynomial of this degree.
    pub fn vector(&self, p: &GradedPolynomial) -> Vec<Q> {
        let mut v = vec![Q::zero(); self.dim()];
        for (m, c) in p.terms() {
            let i = *self.position.get(m).expect("polynomial has the space's degree");
            v[i] = c.clone();
        }
        v
    }

    pub fn polynomial(&self, v: &[Q]) -> GradedPolynomial {
        GradedPolynomial::from_terms(self.monomials.iter().cloned().zip(v.iter().cloned()))
    }
}

/// One degree of a basis, with a solver for coordinates.
pub struct BasisTable {
    pub kind: BasisKind,
    pub degree: u32,
    pub elements: Vec<BasisElement>,
    pub space: MonomialSpace,
    matrix: Matrix,
    pivots: Vec<usize>,
    pivot_inverse: Matrix,
}

impl BasisTable {
    pub fn new(kind: BasisKind, d: u32) -> Self {
        let elements = enumerate_basis(kind, d);
        let space = MonomialSpace::new(d);
        let matrix: Matrix = elements.iter().map(|e| space.vector(&e.poly)).collect();
        let pivots = pivot_columns(&matrix);
        assert_eq!(pivots.len(), elements.len(), "{kind} elements of degree {d} are dependent");
        let square: Matrix = matrix.iter().map(|r| pivots.iter().map(|&c| r[c].clone()).collect()).collect();
        let pivot_inverse = if square.is_empty() { Vec::new() } else { inverse(&square).expect("independent") };
        BasisTable { kind, degree: d, elements, space, matrix, pivots, pivot_inverse }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn rank(&self) -> usize {
        rank(&self.matrix)
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    /// Coordinates of a degree-`d` polynomial, or `None` outside the ℚ-span.
    pub fn solve(&self, p: &GradedPolynomial) -> Option<Vec<Q>> {
        let v = self.space.vector(p);
        if self.elements.is_empty() {
            return v.iter().all(Zero::is_zero).then(Vec::new);
        }
        let restricted: Vec<Q> = self.pivots.iter().map(|&c| v[c].clone()).collect();
        let coords = vec_mat(&restricted, &self.pivot_inverse);
        (vec_mat(&coords, &self.matrix) == v).then_some(coords)
    }
}

fn pivot_columns(m: &Matrix) -> Vec<usize> {
    let mut work = m.clone();
    let ncols = work.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..work.len()).find(|&i| !work[i][c].is_zero()) else {
            continue;
        };
        work.swap(r, p);
        let pivot = work[r][c].clone();
        for i in (r + 1)..work.len() {
            if work[i][c].is_zero() {
                continue;
            }
            let f = &work[i][c] / &pivot;
            crate::linalg::sub_scaled_row(&mut work, i, r, &f, c);
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coordinate {
    pub degree: u32,
    pub position: usize,
    pub index: BasisIndex,
    pub value: Q,
}

impl fmt::Display for Coordinate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "deg {} {} -> {}", self.degree, self.index, crate::rational::fmt_q(&self.value))
    }
}

/// Nonzero coordinates sorted by degree, then basis index.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CoordinateVector {
    pub entries: Vec<Coordinate>,
}

impl CoordinateVector {
    pub fn get(&self, index: &BasisIndex) -> Q {
        self.entries.iter().find(|c| &c.index == index).map(|c| c.value.clone()).unwrap_or_else(Q::zero)
    }

    pub fn first_non_integral(&self) -> Option<&Coordinate> {
        self.entries.iter().find(|c| !is_integer(&c.value))
    }
}

pub fn coordinates(p: &GradedPolynomial, kind: BasisKind) -> Result<CoordinateVector> {
    let mut entries = Vec::new();
    for (d, part) in p.homogeneous_parts() {
        let table = BasisTable::new(kind, d);
        let coords = table.solve(&part).ok_or(Error::NotInSpan { degree: d })?;
        for (i, (value, el)) in coords.into_iter().zip(&table.elements).enumerate() {
            if !value.is_zero() {
                entries.push(Coordinate { degree: d, position: i, index: el.index.clone(), value });
            }
        }
    }
    Ok(CoordinateVector { entries })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    NonIntegral(Coordinate),
    NotInSpan { degree: u32 },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::NonIntegral(c) => write!(f, "{c}"),
            Witness::NotInSpan { degree } => write!(f, "not in the rational span at degree {degree}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Membership {
    In,
    Out(Witness),
}

impl Membership {
    pub fn is_in(&self) -> bool {
        matches!(self, Membership::In)
    }
}

pub fn membership_in_basis(p: &GradedPolynomial, kind: BasisKind) -> Membership {
    match coordinates(p, kind) {
        Err(Error::NotInSpan { degree }) => Membership::Out(Witness::NotInSpan { degree }),
        Err(e) => unreachable!("coordinates only fails outside the span: {e}"),
        Ok(cv) => match cv.first_non_integral() {
            Some(c) => Membership::Out(Witness::NonIntegral(c.clone())),
            None => Membership::In,
        },
    }
}

pub fn membership(p: &GradedPolynomial, form: FormKind) -> Membership {
    membership_in_basis(p, form.basis_kind())
}

/// The ℤ-span of homogeneous degree-`d` generators inside the monomial space.
pub fn lattice_at_degree(gens: &[GradedPolynomial], d: u32) -> Lattice {
    let space = MonomialSpace::new(d);
    let vecs: Vec<Vec<Q>> = gens
        .iter()
        .map(|g| {
            assert!(g.is_homogeneous_of(d), "generator {g} is not homogeneous of degree {d}");
            space.vector(g)
        })
        .collect();
    Lattice::from_generators(space.dim(), &vecs)
}

/// The degree-`d` piece of a form as a lattice.
pub fn form_lattice(form: FormKind, d: u32) -> Lattice {
    let gens: Vec<GradedPolynomial> = enumerate_basis(form.basis_kind(), d).into_iter().map(|e| e.poly).collect();
    lattice_at_degree(&gens, d)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClosureVerdict {
    Closed { products: usize },
    Fails { left: BasisIndex, right: BasisIndex, witness: Box<Witness> },
}

/// Products of basis elements of positive degrees summing to at most `d` stay in the form.
pub fn closure_check(form: FormKind, d: u32) -> ClosureVerdict {
    let kind = form.basis_kind();
    let bases: Vec<Vec<BasisElement>> = (0..=d).map(|k| enumerate_basis(kind, k)).collect();
    let pairs: Vec<(u32, u32)> = (1..=d).flat_map(|a| (a..=d - a).map(move |b| (a, b))).collect();
    let results: Vec<(usize, Option<ClosureVerdict>)> = pairs
        .par_iter()
        .map(|&(a, b)| {
            let table = BasisTable::new(kind, a + b);
            let mut count = 0;
            for x in &bases[a as usize] {
                for y in &bases[b as usize] {
                    count += 1;
                    let prod = &x.poly * &y.poly;
                    let witness = match table.solve(&prod) {
                        None => Some(Witness::NotInSpan { degree: a + b }),
                        Some(c) => c.iter().enumerate().find(|(_, v)| !is_integer(v)).map(|(i, v)| {
                            Witness::NonIntegral(Coordinate {
                                degree: a + b,
                                position: i,
                                index: table.elements[i].index.clone(),
                                value: v.clone(),
                            })
                        }),
                    };
                    if let Some(w) = witness {
                        let fail = ClosureVerdict::Fails { left: x.index.clone(), right: y.index.clone(), witness: Box::new(w) };
                        return (count, Some(fail));
                    }
                }
            }
            (count, None)
        })
        .collect();
    let products = results.iter().map(|(c, _)| c).sum();
    results.into_iter().find_map(|(_, f)| f).unwrap_or(ClosureVerdict::Closed { products })
}

pub use crate::partition::euler_count;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partition_count;
    use crate::rational::{q, qf};

    fn hat(k: usize) -> GradedPolynomial {
        named_series(NamedSeries::Hat, k).coeff(k).clone()
    }

    fn bar(k: usize) -> GradedPolynomial {
        named_series(NamedSeries::Bar, k).coeff(k).clone()
    }

    #[test]
    fn qpol_degree_two_is_hat_and_bar() {
        let b = enumerate_basis(BasisKind::BQpol, 2);
        let polys: Vec<_> = b.iter().map(|e| e.poly.clone()).collect();
        assert_eq!(polys.len(), 2);
        assert!(polys.contains(&hat(2)) && polys.contains(&bar(2)));
    }

    #[test]
    fn cardinalities_and_rank() {
        for d in 0..=8 {
            for kind in [BasisKind::BLambda, BasisKind::BLambdaPrime, BasisKind::BQpol, BasisKind::CheckMonomial] {
                let t = BasisTable::new(kind, d);
                assert_eq!(t.len(), partition_count(d), "{kind} d={d}");
                assert_eq!(t.rank(), t.len());
            }
        }
        assert_eq!(BasisTable::new(BasisKind::BarLambda, 6).len(), partition_count(3));
        assert!(BasisTable::new(BasisKind::BarLambda, 5).is_empty());
    }

    #[test]
    fn h1_squared_in_qpol() {
        let h1sq = &GradedPolynomial::h(1) * &GradedPolynomial::h(1);
        let cv = coordinates(&h1sq, BasisKind::BQpol).unwrap();
        let eps2 = BasisIndex::Qpol { eps: Partition::single(2), bar: Partition::empty() };
        let bar2 = BasisIndex::Qpol { eps: Partition::empty(), bar: Partition::single(2) };
        assert_eq!(cv.get(&eps2), q(2));
        assert_eq!(cv.get(&bar2), q(-2));
    }

    #[test]
    fn membership_examples() {
        assert!(!membership(&bar(2), FormKind::Sym).is_in());
        assert!(membership(&bar(2), FormKind::Mix).is_in());
        assert!(membership(&GradedPolynomial::h(2).scale(&qf(1, 2)), FormKind::Mix).is_in());
        assert!(!membership(&GradedPolynomial::h(1).scale(&qf(1, 2)), FormKind::Mix).is_in());
        assert!(membership(&GradedPolynomial::h(1).scale(&qf(1, 2)), FormKind::CheckForm).is_in());
        assert_eq!(membership(&GradedPolynomial::h(1), FormKind::Bar), Membership::Out(Witness::NotInSpan { degree: 1 }));
        for k in 1..=6 {
            assert!(membership(&hat(k), FormKind::Mix).is_in());
        }
    }

    #[test]
    fn lattices_in_degree_one() {
        let l = lattice_at_degree(&[GradedPolynomial::h(1)], 1);
        assert_eq!(l, Lattice::from_generators(1, &[vec![q(1)]]));
        let c = lattice_at_degree(&[GradedPolynomial::h(1).scale(&qf(1, 2))], 1);
        assert_eq!(c.basis(), vec![vec![qf(1, 2)]]);
    }

    #[test]
    fn closure_in_low_degree() {
        assert!(matches!(closure_check(FormKind::Mix, 5), ClosureVerdict::Closed { .. }));
        assert!(matches!(closure_check(FormKind::Sym, 5), ClosureVerdict::Closed { .. }));
    }
}
