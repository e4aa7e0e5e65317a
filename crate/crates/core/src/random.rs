//! Seeded generators for the property suites. Everything is built from
//! structures that are valid by construction and then transported along
//! random invertible maps, so the samples are not in any normal form.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::adjlift::AdjunctionData;
use crate::comodcat::{self, cofree, Comodule, ComoduleMorphism, ModuleOverAlgebra};
use crate::dgchain::{ChainComplex, DgComodule};
use crate::exactlin::{id, solve_maps, LinMap, Scalar};
use crate::oplaxfun::{NatTransData, OplaxStructure};
use crate::structures::{FinAlgebra, FinBialgebra, FinCoalgebra};

pub type WbRng = ChaCha8Rng;

pub fn seeded(seed: u64) -> WbRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Mostly small integers, occasionally a half.
pub fn scalar(rng: &mut WbRng) -> Scalar {
    let n = rng.gen_range(-2..=2);
    if rng.gen_ratio(1, 6) {
        Scalar::ratio(n, 2).unwrap()
    } else {
        Scalar::from_int(n)
    }
}

pub fn matrix(rng: &mut WbRng, rows: usize, cols: usize) -> LinMap {
    LinMap::from_fn(rows, cols, |_, _| scalar(rng))
}

pub fn invertible(rng: &mut WbRng, n: usize) -> LinMap {
    loop {
        let m = matrix(rng, n, n);
        if m.is_invertible() {
            return m;
        }
    }
}

/// Random element of the span of `basis`.
pub fn combination(rng: &mut WbRng, basis: &[LinMap], rows: usize, cols: usize) -> LinMap {
    basis
        .iter()
        .fold(LinMap::zeros(rows, cols), |acc, b| acc + b.scale(&scalar(rng)))
}

fn injections(a: usize, b: usize) -> (LinMap, LinMap) {
    let i1 = LinMap::from_fn(a + b, a, |i, j| if i == j { Scalar::one() } else { Scalar::zero() });
    let i2 = LinMap::from_fn(a + b, b, |i, j| if i == a + j { Scalar::one() } else { Scalar::zero() });
    (i1, i2)
}

/// `C ⊕ C'` as a coalgebra.
pub fn coalgebra_sum(c1: &FinCoalgebra, c2: &FinCoalgebra) -> FinCoalgebra {
    let (i1, i2) = injections(c1.dim(), c2.dim());
    let (p1, p2) = (i1.transpose(), i2.transpose());
    let comult = i1.kron(&i1) * c1.comult() * &p1 + i2.kron(&i2) * c2.comult() * &p2;
    let counit = c1.counit() * &p1 + c2.counit() * &p2;
    FinCoalgebra::new(c1.dim() + c2.dim(), comult, counit).unwrap()
}

/// `A × A'` as an algebra.
pub fn algebra_product(a1: &FinAlgebra, a2: &FinAlgebra) -> FinAlgebra {
    let (i1, i2) = injections(a1.dim(), a2.dim());
    let (p1, p2) = (i1.transpose(), i2.transpose());
    let mult = &i1 * a1.mult() * p1.kron(&p1) + &i2 * a2.mult() * p2.kron(&p2);
    let unit = &i1 * a1.unit() + &i2 * a2.unit();
    FinAlgebra::new(a1.dim() + a2.dim(), mult, unit).unwrap()
}

fn base_coalgebra(rng: &mut WbRng, dim: usize) -> FinCoalgebra {
    match rng.gen_range(0..3) {
        0 => FinCoalgebra::grouplike(dim),
        1 => FinCoalgebra::divided_power(dim),
        _ if dim >= 2 => {
            let k = rng.gen_range(1..dim);
            coalgebra_sum(&FinCoalgebra::divided_power(k), &base_coalgebra(rng, dim - k))
        }
        _ => FinCoalgebra::ground(),
    }
}

/// A coalgebra of dimension `1..=max_dim`, transported by a random basis change.
pub fn coalgebra(rng: &mut WbRng, max_dim: usize) -> FinCoalgebra {
    let dim = rng.gen_range(1..=max_dim.max(1));
    let c = if dim == 4 && rng.gen_bool(0.3) {
        crate::structures::dual_coalgebra(&FinAlgebra::matrix(2))
    } else {
        base_coalgebra(rng, dim)
    };
    c.transport(&invertible(rng, dim)).unwrap()
}

fn base_algebra(rng: &mut WbRng, dim: usize) -> FinAlgebra {
    match rng.gen_range(0..3) {
        0 => FinAlgebra::product(dim),
        1 => FinAlgebra::truncated_polynomial(dim),
        _ if dim >= 2 => {
            let k = rng.gen_range(1..dim);
            algebra_product(&FinAlgebra::truncated_polynomial(k), &base_algebra(rng, dim - k))
        }
        _ => FinAlgebra::ground(),
    }
}

pub fn algebra(rng: &mut WbRng, max_dim: usize) -> FinAlgebra {
    let dim = rng.gen_range(1..=max_dim.max(1));
    let a = if dim == 4 && rng.gen_bool(0.3) {
        FinAlgebra::matrix(2)
    } else {
        base_algebra(rng, dim)
    };
    a.transport(&invertible(rng, dim)).unwrap()
}

/// A comodule of dimension at most `max_dim` assembled from cofree pieces,
/// their subcomodules (kernels of maps between cofree comodules) and
/// quotients, then transported.
pub fn comodule(rng: &mut WbRng, c: &FinCoalgebra, max_dim: usize) -> Comodule {
    let target = rng.gen_range(1..=max_dim.max(1));
    let mut pieces: Vec<Comodule> = Vec::new();
    let mut total = 0;
    for _ in 0..24 {
        if total >= target {
            break;
        }
        let piece = comodule_piece(rng, c);
        if piece.dim() > 0 && total + piece.dim() <= target {
            total += piece.dim();
            pieces.push(piece);
        }
    }
    let v = comodcat::comodule_product(c, &pieces).unwrap();
    v.transport(&invertible(rng, v.dim())).unwrap()
}

fn comodule_piece(rng: &mut WbRng, c: &FinCoalgebra) -> Comodule {
    let n = c.dim();
    match rng.gen_range(0..3) {
        0 => cofree(c, 1),
        kind => {
            let y = rng.gen_range(1..=2);
            let f = matrix(rng, y, n);
            let g = comodcat::cofree_adjunct(&cofree(c, 1), &f);
            let m = ComoduleMorphism::new(cofree(c, 1), cofree(c, y), g).unwrap();
            let zero = ComoduleMorphism::new(cofree(c, 1), cofree(c, y), LinMap::zeros(n * y, n)).unwrap();
            if kind == 1 {
                comodcat::comodule_equalizer(&m, &zero).unwrap().0
            } else {
                comodcat::comodule_coequalizer(&m, &zero).unwrap().0
            }
        }
    }
}

/// A comodule over a group bialgebra: lines in random degrees, transported.
pub fn graded_comodule(rng: &mut WbRng, h: &FinBialgebra, max_dim: usize) -> Comodule {
    let dim = rng.gen_range(1..=max_dim.max(1));
    let lines: Vec<Comodule> = (0..dim)
        .map(|_| {
            let g = rng.gen_range(0..h.dim());
            Comodule::trivial(h.coalgebra(), &LinMap::basis_vector(h.dim(), g), 1).unwrap()
        })
        .collect();
    let v = comodcat::comodule_product(h.coalgebra(), &lines).unwrap();
    v.transport(&invertible(rng, dim)).unwrap()
}

/// Comodules over a group bialgebra from either generator.
pub fn group_comodule(rng: &mut WbRng, h: &FinBialgebra, max_dim: usize) -> Comodule {
    if rng.gen_bool(0.5) {
        graded_comodule(rng, h, max_dim)
    } else {
        comodule(rng, h.coalgebra(), max_dim)
    }
}

/// Quotient of a free module by a random submodule, or a free module, transported.
pub fn module(rng: &mut WbRng, a: &FinAlgebra, max_dim: usize) -> ModuleOverAlgebra {
    loop {
        let free = comodcat::free_module(a, 1);
        let m = if rng.gen_bool(0.5) || a.dim() > max_dim {
            let y = rng.gen_range(1..=2);
            let src = comodcat::free_module(a, y);
            // a module map out of a free module is m∘(g⊗id_A) for g on generators
            let g = matrix(rng, a.dim(), y);
            let map = a.mult() * g.kron(&id(a.dim()));
            let f = comodcat::ModuleMorphism::new(src.clone(), free.clone(), map).unwrap();
            let zero = comodcat::ModuleMorphism::new(src, free, LinMap::zeros(a.dim(), a.dim() * y)).unwrap();
            comodcat::module_coequalizer(&f, &zero).unwrap().0
        } else {
            free
        };
        if m.dim() > 0 && m.dim() <= max_dim {
            return m.transport(&invertible(rng, m.dim())).unwrap();
        }
    }
}

fn grouplike_partition(rng: &mut WbRng, n: usize, m: usize, w: usize) -> LinMap {
    // b(e_i⊗x) = Σ_j M_ij x⊗e_j with {M_ij}_j complete orthogonal idempotents
    let mut b = LinMap::zeros(w * m, n * w);
    for i in 0..n {
        let a = invertible(rng, w);
        let ainv = a.inverse().unwrap();
        let owner: Vec<usize> = (0..w).map(|_| rng.gen_range(0..m)).collect();
        for j in 0..m {
            let e = LinMap::from_fn(w, w, |r, c| {
                if r == c && owner[r] == j {
                    Scalar::one()
                } else {
                    Scalar::zero()
                }
            });
            let mij = &a * e * &ainv;
            for x in 0..w {
                for y in 0..w {
                    b.set(y * m + j, i * w + x, mij.get(y, x).clone());
                }
            }
        }
    }
    b
}

/// An oplax structure with coalgebra dims and `W` dim at most the given bounds.
pub fn oplax(rng: &mut WbRng, max_c: usize, max_w: usize) -> OplaxStructure {
    let w = rng.gen_range(1..=max_w.max(1));
    let base = match rng.gen_range(0..5) {
        0 => {
            let (n, m) = (rng.gen_range(1..=max_c), rng.gen_range(1..=max_c));
            let b = grouplike_partition(rng, n, m, w);
            OplaxStructure::new(FinCoalgebra::grouplike(n), FinCoalgebra::grouplike(m), w, b).unwrap()
        }
        1 => {
            let n = rng.gen_range(1..=max_c);
            let lambda = scalar(rng);
            let phi = LinMap::from_fn(n, n, |i, j| {
                if i == j {
                    pow(&lambda, i)
                } else {
                    Scalar::zero()
                }
            });
            let c = FinCoalgebra::divided_power(n);
            let s = OplaxStructure::from_coalgebra_map(&c, &c, &phi, 1).unwrap();
            sum_copies(rng, &s, w, |rng| {
                let mu = scalar(rng);
                let phi = LinMap::from_fn(n, n, |i, j| if i == j { pow(&mu, i) } else { Scalar::zero() });
                OplaxStructure::from_coalgebra_map(&c, &c, &phi, 1).unwrap()
            })
        }
        2 => {
            // grouplike set map f: [n] → [m]
            let (n, m) = (rng.gen_range(1..=max_c), rng.gen_range(1..=max_c));
            let gen_map = |rng: &mut WbRng| {
                let f: Vec<usize> = (0..n).map(|_| rng.gen_range(0..m)).collect();
                LinMap::from_fn(m, n, |i, j| if f[j] == i { Scalar::one() } else { Scalar::zero() })
            };
            let (c, d) = (FinCoalgebra::grouplike(n), FinCoalgebra::grouplike(m));
            let first = OplaxStructure::from_coalgebra_map(&c, &d, &gen_map(rng), 1).unwrap();
            sum_copies(rng, &first, w, |rng| OplaxStructure::from_coalgebra_map(&c, &d, &gen_map(rng), 1).unwrap())
        }
        3 => OplaxStructure::forgetful(&coalgebra(rng, max_c), w),
        _ => {
            let c = coalgebra(rng, max_c);
            OplaxStructure::from_coalgebra_map(&c, &c, &id(c.dim()), w).unwrap()
        }
    };
    let (c, d) = (base.source().dim(), base.target().dim());
    base.transport(&invertible(rng, c), &invertible(rng, base.carrier()), &invertible(rng, d))
        .unwrap()
}

fn pow(s: &Scalar, k: usize) -> Scalar {
    (0..k).fold(Scalar::one(), |acc, _| &acc * s)
}

fn sum_copies(
    rng: &mut WbRng,
    first: &OplaxStructure,
    w: usize,
    mut next: impl FnMut(&mut WbRng) -> OplaxStructure,
) -> OplaxStructure {
    let mut s = first.clone();
    while s.carrier() < w {
        let t = next(rng);
        s = s.direct_sum(&t).unwrap();
    }
    s
}

/// Random pairing on `W`.
pub fn adjunction(rng: &mut WbRng, w: usize) -> AdjunctionData {
    AdjunctionData::with_pairing(&invertible(rng, w)).unwrap()
}

/// A 2-cell between two oplax structures on the same comonads. About half
/// the time `a` is drawn from the solutions of the component equation.
pub fn nat_trans(rng: &mut WbRng, max_c: usize, max_w: usize) -> NatTransData {
    let s = oplax(rng, max_c, max_w);
    let t = match rng.gen_range(0..3) {
        0 => s.clone(),
        1 => s
            .transport(&id(s.source().dim()), &invertible(rng, s.carrier()), &id(s.target().dim()))
            .unwrap(),
        _ => {
            // the same comonads with an independent structure of the same kind
            let w2 = rng.gen_range(1..=max_w);
            if s.target().dim() == 1 {
                retarget(&OplaxStructure::forgetful(s.source(), w2), s.target())
            } else {
                s.direct_sum(&s).unwrap()
            }
        }
    };
    let (c, d) = (s.source().dim(), s.target().dim());
    let a = if rng.gen_bool(0.5) {
        let sols = solve_maps(s.carrier(), t.carrier(), |a| {
            a.kron(&id(d)) * s.b() - t.b() * id(c).kron(a)
        });
        combination(rng, &sols, t.carrier(), s.carrier())
    } else {
        matrix(rng, t.carrier(), s.carrier())
    };
    NatTransData::new(s, t, a).unwrap()
}

/// `forgetful` retargeted at a 1-dimensional coalgebra `d`: `Δ(x) = λx⊗x`, `ε(x) = 1/λ`.
fn retarget(f: &OplaxStructure, d: &FinCoalgebra) -> OplaxStructure {
    let q = LinMap::from_fn(1, 1, |_, _| d.comult().get(0, 0).clone());
    let t = f.transport(&id(f.source().dim()), &id(f.carrier()), &q).unwrap();
    debug_assert_eq!(t.target(), d);
    t
}

/// `count` comodules over `c` of dims at most `max_dim`; the first is
/// `cofree(𝕂)` when it fits.
pub fn comodule_samples(rng: &mut WbRng, c: &FinCoalgebra, count: usize, max_dim: usize) -> Vec<Comodule> {
    let mut out = Vec::with_capacity(count);
    if c.dim() <= max_dim && count > 0 {
        out.push(cofree(c, 1));
    }
    while out.len() < count {
        out.push(comodule(rng, c, max_dim));
    }
    out
}

/// One cell of a dg comodule over a group bialgebra: a line, or a
/// contractible pair, in a group degree.
fn dg_cell(rng: &mut WbRng, h: &FinBialgebra, degrees: &[i64]) -> DgComodule {
    let g = LinMap::basis_vector(h.dim(), rng.gen_range(0..h.dim()));
    let top = *degrees.choose(rng).unwrap();
    if rng.gen_bool(0.5) && degrees.contains(&(top - 1)) {
        let x = ChainComplex::new(top - 1, vec![1, 1], vec![id(1).scale(&nonzero(rng))]).unwrap();
        DgComodule::new(h.clone(), x, vec![g.clone(), g]).unwrap()
    } else {
        DgComodule::new(h.clone(), ChainComplex::concentrated(top, 1), vec![g]).unwrap()
    }
}

fn nonzero(rng: &mut WbRng) -> Scalar {
    loop {
        let s = scalar(rng);
        if !s.is_zero() {
            return s;
        }
    }
}

/// A dg comodule over a group bialgebra with total dimension `1..=max_dim`
/// spread over the given degrees, transported degreewise.
pub fn dg_comodule(rng: &mut WbRng, h: &FinBialgebra, degrees: &[i64], max_dim: usize) -> DgComodule {
    let target = rng.gen_range(1..=max_dim.max(1));
    let mut acc: Option<DgComodule> = None;
    let mut total = 0;
    while total < target {
        let cell = dg_cell(rng, h, degrees);
        let d = cell.complex().total_dim();
        if total + d > target {
            continue;
        }
        total += d;
        acc = Some(match acc {
            None => cell,
            Some(a) => a.direct_sum(&cell).unwrap(),
        });
    }
    let v = acc.unwrap();
    let maps: Vec<LinMap> = v.complex().dims().iter().map(|&d| invertible(rng, d)).collect();
    v.transport(&maps).unwrap()
}

/// A bounded complex with random differentials, built from cells and transported.
pub fn complex(rng: &mut WbRng, degrees: &[i64], max_dim: usize) -> ChainComplex {
    dg_comodule(rng, &FinBialgebra::ground(), degrees, max_dim).complex().clone()
}
