//! Buchberger Gröbner bases over the rationals.
//!
//! Normal pair-selection strategy with both of Buchberger's criteria,
//! reduced bases, normal forms, ideal membership, elimination through a
//! block order, and the projective-emptiness test used by the smoothness
//! certificate. Problem sizes here (a handful of quadrics in five
//! variables) never call for F4/F5.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use crate::polyalg::multi::{Mono, VarSet};
use crate::{Error, QPoly, Rat, Result};
use num_traits::{One, Zero};

/// Monomial order for basis computations.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Order {
    /// Graded reverse lexicographic.
    Grevlex,
    /// Lexicographic.
    Lex,
    /// Elimination block order: the first `k` variables dominate; grevlex
    /// inside each block.
    Block(usize),
}

impl Order {
    fn cmp(self, a: &Mono, b: &Mono) -> Ordering {
        match self {
            Order::Grevlex => grevlex(&a.0, &b.0),
            Order::Lex => a.0.cmp(&b.0),
            Order::Block(k) => grevlex(&a.0[..k], &b.0[..k]).then_with(|| grevlex(&a.0[k..], &b.0[k..])),
        }
    }
}

fn grevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        ord => return ord,
    }
    for k in (0..a.len()).rev() {
        match a[k].cmp(&b[k]) {
            Ordering::Equal => {}
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}

/// A polynomial ideal: generators plus the order its basis is computed in.
#[derive(Clone, Debug)]
pub struct Ideal {
    pub vars: VarSet,
    pub gens: Vec<QPoly>,
    pub order: Order,
}

impl Ideal {
    pub fn new(vars: &VarSet, gens: Vec<QPoly>, order: Order) -> Self {
        let gens = gens
            .into_iter()
            .map(|g| g.embed(vars))
            .filter(|g| !g.is_zero())
            .collect();
        Ideal { vars: vars.clone(), gens, order }
    }
}

/// Engine representation: terms sorted descending in the active order.
#[derive(Clone, Debug, PartialEq)]
struct SPoly {
    terms: Vec<(Mono, Rat)>,
}

impl SPoly {
    fn from_poly(p: &QPoly, ord: Order) -> Self {
        let mut terms: Vec<(Mono, Rat)> = p.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
        terms.sort_by(|x, y| ord.cmp(&y.0, &x.0));
        SPoly { terms }
    }

    fn to_poly(&self, vars: &VarSet) -> QPoly {
        QPoly::from_terms(vars, self.terms.iter().cloned())
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn lead(&self) -> &(Mono, Rat) {
        &self.terms[0]
    }

    fn add_scaled(&self, other: &SPoly, mono: &Mono, coef: &Rat, ord: Order) -> SPoly {
        // self + coef * x^mono * other, merging sorted term lists
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut i = 0;
        let mut j = 0;
        while i < self.terms.len() || j < other.terms.len() {
            if j == other.terms.len() {
                out.push(self.terms[i].clone());
                i += 1;
                continue;
            }
            let om = other.terms[j].0.mul(mono);
            if i == self.terms.len() {
                let c = &other.terms[j].1 * coef;
                if !c.is_zero() {
                    out.push((om, c));
                }
                j += 1;
                continue;
            }
            match ord.cmp(&self.terms[i].0, &om) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = &other.terms[j].1 * coef;
                    if !c.is_zero() {
                        out.push((om, c));
                    }
                    j += 1;
                }
                Ordering::Equal => {
                    let c = &self.terms[i].1 + &(&other.terms[j].1 * coef);
                    if !c.is_zero() {
                        out.push((self.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        SPoly { terms: out }
    }

    fn make_primitive(&mut self) {
        use num::Integer;
        if self.terms.is_empty() {
            return;
        }
        let mut num_gcd = num::BigInt::from(0);
        let mut den_lcm = num::BigInt::from(1);
        for (_, c) in &self.terms {
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut content = Rat::new(num_gcd, den_lcm);
        if self.terms[0].1 < Rat::zero() {
            content = -content;
        }
        for (_, c) in &mut self.terms {
            *c = &*c / &content;
        }
    }

    fn make_monic(&mut self) {
        if self.terms.is_empty() {
            return;
        }
        let lc = self.terms[0].1.clone();
        for (_, c) in &mut self.terms {
            *c = &*c / &lc;
        }
    }
}

/// Full reduction of `f` by the family `basis`; deterministic (first
/// reducer in basis order wins, largest reducible term first).
fn reduce(f: &SPoly, basis: &[SPoly], ord: Order) -> SPoly {
    let mut work = f.clone();
    let mut out: Vec<(Mono, Rat)> = vec![];
    'outer: while !work.is_zero() {
        let (m, c) = work.lead().clone();
        for g in basis {
            if g.is_zero() {
                continue;
            }
            if let Some(q) = m.try_div(&g.lead().0) {
                let coef = -(&c / &g.lead().1);
                work = work.add_scaled(g, &q, &coef, ord);
                continue 'outer;
            }
        }
        out.push((m, c));
        work.terms.remove(0);
    }
    SPoly { terms: out }
}

/// Reduced Gröbner basis of the ideal, in its order; the basis is unique
/// (monic, no head divides another, tails fully reduced) and sorted by
/// ascending leading monomial.
pub struct GroebnerBasis {
    pub vars: VarSet,
    pub order: Order,
    basis: Vec<SPoly>,
}

pub fn groebner_basis(ideal: &Ideal) -> GroebnerBasis {
    let ord = ideal.order;
    let mut basis: Vec<SPoly> = vec![];
    for g in &ideal.gens {
        let mut s = SPoly::from_poly(g, ord);
        s.make_primitive();
        if !s.is_zero() {
            basis.push(s);
        }
    }
    let mut pairs: BTreeSet<(u32, Vec<u32>, usize, usize)> = BTreeSet::new();
    let mut dropped: BTreeSet<(usize, usize)> = BTreeSet::new();
    let add_pairs = |basis: &[SPoly], upto: usize, pairs: &mut BTreeSet<(u32, Vec<u32>, usize, usize)>| {
        for i in 0..upto {
            let l = basis[i].lead().0.lcm(&basis[upto].lead().0);
            pairs.insert((l.total_degree(), l.0.clone(), i, upto));
        }
    };
    for k in 1..basis.len() {
        add_pairs(&basis, k, &mut pairs);
    }
    while let Some(entry) = pairs.iter().next().cloned() {
        pairs.remove(&entry);
        let (_, _, i, j) = entry;
        let (mi, mj) = (&basis[i].lead().0, &basis[j].lead().0);
        // product criterion
        if mi.coprime(mj) {
            dropped.insert((i, j));
            continue;
        }
        // chain criterion
        let lcm = mi.lcm(mj);
        let chained = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && lcm.try_div(&basis[k].lead().0).is_some()
                && done(&pairs, &dropped, i, k, &basis)
                && done(&pairs, &dropped, k, j, &basis)
        });
        if chained {
            dropped.insert((i, j));
            continue;
        }
        // S-polynomial
        let (qi, qj) = (lcm.try_div(mi).unwrap(), lcm.try_div(mj).unwrap());
        let ci = basis[j].lead().1.clone();
        let cj = -basis[i].lead().1.clone();
        let zero = SPoly { terms: vec![] };
        let s = zero
            .add_scaled(&basis[i], &qi, &ci, ord)
            .add_scaled(&basis[j], &qj, &cj, ord);
        let mut r = reduce(&s, &basis, ord);
        dropped.insert((i, j));
        if !r.is_zero() {
            r.make_primitive();
            basis.push(r);
            add_pairs(&basis, basis.len() - 1, &mut pairs);
        }
    }
    // minimize: drop members whose head is divisible by another head
    let mut keep: Vec<bool> = vec![true; basis.len()];
    for i in 0..basis.len() {
        for j in 0..basis.len() {
            if i != j
                && keep[j]
                && basis[i].lead().0.try_div(&basis[j].lead().0).is_some()
                && (basis[i].lead().0 != basis[j].lead().0 || j < i)
            {
                keep[i] = false;
                break;
            }
        }
    }
    let minimal: Vec<SPoly> = basis
        .into_iter()
        .zip(keep)
        .filter_map(|(g, k)| k.then_some(g))
        .collect();
    // interreduce tails
    let mut reduced: Vec<SPoly> = vec![];
    for i in 0..minimal.len() {
        let others: Vec<SPoly> = minimal
            .iter()
            .enumerate()
            .filter_map(|(j, g)| (j != i).then(|| g.clone()))
            .collect();
        let mut r = reduce(&minimal[i], &others, ord);
        r.make_monic();
        if !r.is_zero() {
            reduced.push(r);
        }
    }
    reduced.sort_by(|a, b| ord.cmp(&a.lead().0, &b.lead().0));
    GroebnerBasis { vars: ideal.vars.clone(), order: ord, basis: reduced }
}

fn done(
    pairs: &BTreeSet<(u32, Vec<u32>, usize, usize)>,
    dropped: &BTreeSet<(usize, usize)>,
    a: usize,
    b: usize,
    basis: &[SPoly],
) -> bool {
    let (i, j) = if a < b { (a, b) } else { (b, a) };
    if dropped.contains(&(i, j)) {
        return true;
    }
    let l = basis[i].lead().0.lcm(&basis[j].lead().0);
    !pairs.contains(&(l.total_degree(), l.0.clone(), i, j))
}

impl GroebnerBasis {
    pub fn polys(&self) -> Vec<QPoly> {
        self.basis.iter().map(|g| g.to_poly(&self.vars)).collect()
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn normal_form(&self, f: &QPoly) -> QPoly {
        let s = SPoly::from_poly(&f.embed(&self.vars), self.order);
        reduce(&s, &self.basis, self.order).to_poly(&self.vars)
    }

    pub fn contains(&self, f: &QPoly) -> bool {
        self.normal_form(f).is_zero()
    }

    /// Whether the basis is `{1}` (the whole ring).
    pub fn is_unit_ideal(&self) -> bool {
        self.basis.len() == 1 && self.basis[0].lead().0.is_unit()
    }
}

/// Membership `f` in the ideal generated by `gens` under grevlex.
pub fn ideal_contains(f: &QPoly, ideal: &Ideal) -> bool {
    groebner_basis(ideal).contains(f)
}

/// Eliminate `drop_vars`: returns generators of the intersection with the
/// subring in the remaining variables, as an ideal over those variables.
pub fn eliminate(ideal: &Ideal, drop_vars: &[&str]) -> Ideal {
    let mut first: Vec<String> = vec![];
    let mut rest: Vec<String> = vec![];
    for n in ideal.vars.names() {
        if drop_vars.contains(&n.as_str()) {
            first.push(n.clone());
        } else {
            rest.push(n.clone());
        }
    }
    assert_eq!(first.len(), drop_vars.len(), "drop variable missing from ideal");
    let block = first.len();
    let mut ordered = first;
    ordered.extend(rest.iter().cloned());
    let ovars = VarSet::new(ordered);
    let reordered: Vec<QPoly> = ideal.gens.iter().map(|g| g.embed(&ovars)).collect();
    let gb = groebner_basis(&Ideal::new(&ovars, reordered, Order::Block(block)));
    let kept = VarSet::new(rest);
    let gens: Vec<QPoly> = gb
        .polys()
        .into_iter()
        .filter(|p| {
            p.terms().all(|(m, _)| m.0[..block].iter().all(|&e| e == 0))
        })
        .map(|p| {
            QPoly::from_terms(
                &kept,
                p.terms().map(|(m, c)| (Mono(m.0[block..].to_vec()), c.clone())),
            )
        })
        .collect();
    Ideal::new(&kept, gens, Order::Grevlex)
}

/// Whether the projective variety of a homogeneous ideal is empty, i.e.
/// the radical contains every variable. Powers up to `6 * nvars` are
/// tested against the grevlex basis first; any variable that escapes the
/// bound falls back to an exact radical-membership test (adjoining
/// `1 - t*x_i` and testing `1`).
pub fn is_empty_projective(ideal: &Ideal) -> Result<bool> {
    for g in &ideal.gens {
        if !g.is_homogeneous() {
            return Err(Error::NonHomogeneous);
        }
    }
    let gb = groebner_basis(&Ideal::new(&ideal.vars, ideal.gens.clone(), Order::Grevlex));
    let n = ideal.vars.len();
    let bound = 6 * n as u32;
    'vars: for i in 0..n {
        let name = ideal.vars.names()[i].clone();
        let xi = QPoly::var(&ideal.vars, &name);
        let mut p = xi.clone();
        for _ in 1..=bound {
            if gb.normal_form(&p).is_zero() {
                continue 'vars;
            }
            p = p * xi.clone();
        }
        // saturation fallback: x_i in the radical iff 1 in I + (1 - t x_i)
        let mut names: Vec<String> = ideal.vars.names().to_vec();
        names.push("_t".into());
        let evars = VarSet::new(names);
        let mut gens: Vec<QPoly> = ideal.gens.iter().map(|g| g.embed(&evars)).collect();
        let t = QPoly::var(&evars, "_t");
        let xi_e = QPoly::var(&evars, &name);
        gens.push(QPoly::one() - t * xi_e);
        let rab = groebner_basis(&Ideal::new(&evars, gens, Order::Grevlex));
        if !rab.is_unit_ideal() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Normal forms behave linearly modulo the ideal; exposed for the property
/// tests.
pub fn nf_is_linear_sample(gb: &GroebnerBasis, f: &QPoly, g: &QPoly) -> bool {
    let lhs = gb.normal_form(&(f.clone() + g.clone()));
    let rhs = gb.normal_form(&(gb.normal_form(f) + gb.normal_form(g)));
    lhs == rhs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::multi::polyvars;
    use crate::polyalg::ring::Ring as _;
    use crate::rat;

    #[test]
    fn basis_of_two_variables_is_itself() {
        let (vs, [x, y]) = polyvars::<Rat, 2>(["x", "y"]);
        let gb = groebner_basis(&Ideal::new(&vs, vec![x.clone(), y.clone()], Order::Grevlex));
        assert_eq!(gb.polys(), vec![y, x]);
    }

    #[test]
    fn normal_form_of_x4_minus_x() {
        // <x^2 - y, y^2 - x> contains x^4 - x
        let (vs, [x, y]) = polyvars::<Rat, 2>(["x", "y"]);
        let i = Ideal::new(
            &vs,
            vec![x.clone() * x.clone() - y.clone(), y.clone() * y.clone() - x.clone()],
            Order::Grevlex,
        );
        let gb = groebner_basis(&i);
        let f = x.pow(4) - x.clone();
        assert!(gb.contains(&f));
        assert!(!gb.contains(&(x.clone() + y.clone())));
    }

    #[test]
    fn fermat_cubic_jacobian_ideal() {
        // partial derivatives of sum of cubes are the squares
        let names = ["x0", "x1", "x2", "x3", "x4"];
        let vs = VarSet::new(names);
        let mut f = QPoly::zero_over(&vs);
        for n in names {
            f = f + QPoly::var(&vs, n).pow(3);
        }
        let gens: Vec<QPoly> = names.iter().map(|n| f.derivative(n)).collect();
        let gb = groebner_basis(&Ideal::new(&vs, gens, Order::Grevlex));
        // ascending leading-monomial order puts the last variable first
        let expect: Vec<QPoly> = names.iter().rev().map(|n| QPoly::var(&vs, n).pow(2)).collect();
        assert_eq!(gb.polys(), expect);
    }

    #[test]
    fn membership_examples() {
        let (vs, [x, y]) = polyvars::<Rat, 2>(["x", "y"]);
        let i = Ideal::new(&vs, vec![x.clone(), y.clone()], Order::Grevlex);
        assert!(ideal_contains(&(x.clone() + y.clone()), &i));
        assert!(!ideal_contains(&QPoly::one(), &i));
    }

    #[test]
    fn eliminate_twisted_cubic() {
        // eliminate t from <x - t^2, y - t^3> : get y^2 - x^3
        let (vs, [t, x, y]) = polyvars::<Rat, 3>(["t", "x", "y"]);
        let i = Ideal::new(
            &vs,
            vec![x.clone() - t.clone() * t.clone(), y.clone() - t.pow(3)],
            Order::Block(1),
        );
        let e = eliminate(&i, &["t"]);
        assert_eq!(e.gens.len(), 1);
        let (exv, [ex, ey]) = polyvars::<Rat, 2>(["x", "y"]);
        let expect = ey.clone() * ey.clone() - ex.pow(3);
        let got = &e.gens[0];
        let (_, gp) = got.content_primitive();
        let (_, epv) = expect.embed(&exv).content_primitive();
        assert_eq!(gp, epv);
    }

    #[test]
    fn eliminate_algebraic_number_relation() {
        // eliminate x from <u - x - 1, x^2 - 2>: u^2 - 2u - 1
        let (vs, [x, u]) = polyvars::<Rat, 2>(["x", "u"]);
        let i = Ideal::new(
            &vs,
            vec![u.clone() - x.clone() - QPoly::one(), x.clone() * x.clone() - QPoly::from_int(2)],
            Order::Block(1),
        );
        let e = eliminate(&i, &["x"]);
        assert_eq!(e.gens.len(), 1);
        let (_, [uu]) = polyvars::<Rat, 1>(["u"]);
        let expect = uu.clone() * uu.clone() - uu.scale(&rat(2)) - QPoly::one();
        assert_eq!(e.gens[0].content_primitive().1, expect.content_primitive().1);
    }

    #[test]
    fn projective_emptiness() {
        let names = ["x0", "x1", "x2", "x3", "x4"];
        let vs = VarSet::new(names);
        let all: Vec<QPoly> = names.iter().map(|n| QPoly::var(&vs, n)).collect();
        assert!(is_empty_projective(&Ideal::new(&vs, all, Order::Grevlex)).unwrap());

        let (vs2, [x0, x1]) = polyvars::<Rat, 2>(["x0", "x1"]);
        let i = Ideal::new(&vs2, vec![x0.clone() * x1.clone()], Order::Grevlex);
        assert!(!is_empty_projective(&i).unwrap());

        let nonhom = Ideal::new(&vs2, vec![x0.clone() + QPoly::one()], Order::Grevlex);
        assert!(matches!(is_empty_projective(&nonhom), Err(Error::NonHomogeneous)));
    }

    #[test]
    fn reduced_basis_is_idempotent_and_canonical() {
        let (vs, [x, y, z]) = polyvars::<Rat, 3>(["x", "y", "z"]);
        let gens = vec![
            x.clone() * y.clone() - z.clone(),
            y.clone() * z.clone() - x.clone(),
            x.clone() * z.clone() - y.clone(),
        ];
        let gb1 = groebner_basis(&Ideal::new(&vs, gens.clone(), Order::Grevlex));
        let gb2 = groebner_basis(&Ideal::new(&vs, gb1.polys(), Order::Grevlex));
        assert_eq!(gb1.polys(), gb2.polys());
    }

    #[test]
    fn normal_form_linearity_sampled() {
        use rand::{Rng, SeedableRng};
        let (vs, [x, y, z]) = polyvars::<Rat, 3>(["x", "y", "z"]);
        let gens = vec![
            x.clone() * x.clone() + y.clone() * z.clone(),
            y.clone() * y.clone() - z.clone() * z.clone() + x.clone(),
        ];
        let gb = groebner_basis(&Ideal::new(&vs, gens, Order::Grevlex));
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(99);
        for _ in 0..20 {
            let rand_poly = |rng: &mut rand_chacha::ChaCha8Rng| {
                let mut p = QPoly::zero_over(&vs);
                for _ in 0..4 {
                    let m = Mono((0..3).map(|_| rng.gen_range(0..3)).collect());
                    p.add_term(m, rat(rng.gen_range(-4..=4)));
                }
                p
            };
            let f = rand_poly(&mut rng);
            let g = rand_poly(&mut rng);
            assert!(nf_is_linear_sample(&gb, &f, &g));
        }
    }
}
