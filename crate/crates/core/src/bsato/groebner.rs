//! Buchberger's algorithm with the Gebauer–Möller criteria.
//!
//! Internally polynomials carry primitive integer coefficients and are
//! reduced by pseudo-division, so no rational arithmetic happens inside the
//! main loop. Terms are kept sorted ascending, leading term last.

use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::poly::{Exponent, MultiPoly};
use crate::exactnum::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MonomialOrder {
    Lex,
    GrevLex,
    /// Graded reverse lex on the first `split` variables, ties broken by
    /// graded reverse lex on the rest. Eliminates the first block.
    BlockGrevLex { split: usize },
}

fn grevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().zip(b).rev() {
            if x != y {
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

impl MonomialOrder {
    pub fn compare(&self, a: &[u32], b: &[u32]) -> Ordering {
        match *self {
            MonomialOrder::Lex => a.cmp(b),
            MonomialOrder::GrevLex => grevlex(a, b),
            MonomialOrder::BlockGrevLex { split } => {
                grevlex(&a[..split], &b[..split]).then_with(|| grevlex(&a[split..], &b[split..]))
            }
        }
    }
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn lcm_mono(a: &[u32], b: &[u32]) -> Exponent {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

fn coprime(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| *x == 0 || *y == 0)
}

fn sub_mono(a: &[u32], b: &[u32]) -> Exponent {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn add_mono(a: &[u32], b: &[u32]) -> Exponent {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

#[derive(Clone, Debug)]
struct IPoly {
    terms: Vec<(Exponent, BigInt)>,
}

impl IPoly {
    fn from_multi(p: &MultiPoly, ord: MonomialOrder) -> Self {
        let den = p
            .terms()
            .fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
        let mut terms: Vec<(Exponent, BigInt)> = p
            .terms()
            .map(|(e, c)| (e.clone(), (c * &den).to_integer()))
            .collect();
        terms.sort_by(|a, b| ord.compare(&a.0, &b.0));
        let mut out = IPoly { terms };
        out.make_primitive();
        out
    }

    fn to_multi(&self, nvars: usize) -> MultiPoly {
        let lead = self.terms.last().map(|t| t.1.clone()).unwrap_or_else(BigInt::one);
        MultiPoly::from_terms(
            nvars,
            self.terms
                .iter()
                .map(|(e, c)| (e.clone(), Rational::new(c.clone(), lead.clone()))),
        )
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn lead(&self) -> &Exponent {
        &self.terms.last().unwrap().0
    }

    fn lead_coeff(&self) -> &BigInt {
        &self.terms.last().unwrap().1
    }

    fn make_primitive(&mut self) {
        let g = self.terms.iter().fold(BigInt::zero(), |g, t| g.gcd(&t.1));
        if g.is_zero() {
            return;
        }
        let g = if self.lead_coeff().is_negative() { -g } else { g };
        if !g.is_one() {
            for t in &mut self.terms {
                t.1 /= &g;
            }
        }
    }

    /// `a·self − b·x^shift·g`, both operands ascending.
    fn combine(&self, a: &BigInt, b: &BigInt, shift: &[u32], g: &IPoly, ord: MonomialOrder) -> IPoly {
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let mut i = 0;
        let mut j = 0;
        let f = &self.terms;
        let shifted: Vec<(Exponent, BigInt)> =
            g.terms.iter().map(|(e, c)| (add_mono(e, shift), c * b)).collect();
        while i < f.len() || j < shifted.len() {
            let step = if i == f.len() {
                Ordering::Greater
            } else if j == shifted.len() {
                Ordering::Less
            } else {
                ord.compare(&f[i].0, &shifted[j].0)
            };
            match step {
                Ordering::Less => {
                    out.push((f[i].0.clone(), &f[i].1 * a));
                    i += 1;
                }
                Ordering::Greater => {
                    out.push((shifted[j].0.clone(), -&shifted[j].1));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = &f[i].1 * a - &shifted[j].1;
                    if !c.is_zero() {
                        out.push((f[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        IPoly { terms: out }
    }
}

/// Full reduction of `f` by `basis`; the result is the normal form up to a
/// positive integer factor, made primitive.
fn reduce(f: &IPoly, basis: &[&IPoly], ord: MonomialOrder) -> IPoly {
    let mut f = f.clone();
    // remainder terms in descending order
    let mut rem: Vec<(Exponent, BigInt)> = Vec::new();
    let mut steps = 0u32;
    while !f.is_zero() {
        let lead = f.lead().clone();
        match basis.iter().find(|g| divides(g.lead(), &lead)) {
            Some(g) => {
                let lc_f = f.lead_coeff().clone();
                let lc_g = g.lead_coeff();
                let d = lc_f.gcd(lc_g);
                let mut a = lc_g / &d;
                let mut b = &lc_f / &d;
                if a.is_negative() {
                    a = -a;
                    b = -b;
                }
                let shift = sub_mono(&lead, g.lead());
                f = f.combine(&a, &b, &shift, g, ord);
                if !a.is_one() {
                    for t in &mut rem {
                        t.1 *= &a;
                    }
                }
                steps += 1;
                if steps % 16 == 0 {
                    let g = f
                        .terms
                        .iter()
                        .chain(rem.iter())
                        .fold(BigInt::zero(), |g, t| g.gcd(&t.1));
                    if g > BigInt::one() {
                        for t in f.terms.iter_mut().chain(rem.iter_mut()) {
                            t.1 /= &g;
                        }
                    }
                }
            }
            None => rem.push(f.terms.pop().unwrap()),
        }
    }
    rem.reverse();
    let mut out = IPoly { terms: rem };
    out.make_primitive();
    out
}

fn s_poly(f: &IPoly, g: &IPoly, ord: MonomialOrder) -> IPoly {
    let l = lcm_mono(f.lead(), g.lead());
    let d = f.lead_coeff().gcd(g.lead_coeff());
    let a = g.lead_coeff() / &d;
    let b = f.lead_coeff() / &d;
    // a·x^{l−lt f}·f − b·x^{l−lt g}·g
    let mf = sub_mono(&l, f.lead());
    let shifted_f = IPoly {
        terms: f.terms.iter().map(|(e, c)| (add_mono(e, &mf), c.clone())).collect(),
    };
    shifted_f.combine(&a, &b, &sub_mono(&l, g.lead()), g, ord)
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Exponent,
}

struct Engine {
    ord: MonomialOrder,
    polys: Vec<IPoly>,
    active: Vec<usize>,
    pairs: Vec<Pair>,
}

impl Engine {
    fn basis(&self) -> Vec<&IPoly> {
        self.active.iter().map(|&k| &self.polys[k]).collect()
    }

    // Gebauer–Möller update with the new element `h`.
    fn update(&mut self, h: IPoly) {
        let hk = self.polys.len();
        let lt_h = h.lead().clone();
        self.polys.push(h);

        let mut candidates: Vec<Pair> = self
            .active
            .iter()
            .map(|&g| Pair {
                i: g,
                j: hk,
                lcm: lcm_mono(self.polys[g].lead(), &lt_h),
            })
            .collect();
        let mut kept: Vec<Pair> = Vec::new();
        while let Some(p) = (!candidates.is_empty()).then(|| candidates.remove(0)) {
            let lead_g = self.polys[p.i].lead();
            let dominated = candidates
                .iter()
                .chain(kept.iter())
                .any(|q| divides(&q.lcm, &p.lcm));
            if coprime(lead_g, &lt_h) || !dominated {
                kept.push(p);
            }
        }
        let polys = &self.polys;
        kept.retain(|p| !coprime(polys[p.i].lead(), &lt_h));

        self.pairs.retain(|p| {
            !(divides(&lt_h, &p.lcm)
                && lcm_mono(polys[p.i].lead(), &lt_h) != p.lcm
                && lcm_mono(polys[p.j].lead(), &lt_h) != p.lcm)
        });
        self.pairs.extend(kept);

        self.active.retain(|&g| !divides(&lt_h, polys[g].lead()));
        self.active.push(hk);
    }

    fn next_pair(&mut self) -> Option<Pair> {
        let best = self
            .pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                self.ord
                    .compare(&a.lcm, &b.lcm)
                    .then((a.i, a.j).cmp(&(b.i, b.j)))
            })
            .map(|(k, _)| k)?;
        Some(self.pairs.swap_remove(best))
    }
}

/// Reduced Gröbner basis of the ideal generated by `gens`, each element
/// monic, sorted ascending by leading monomial. The zero ideal gives an
/// empty basis.
pub fn groebner_basis(gens: &[MultiPoly], order: MonomialOrder) -> Vec<MultiPoly> {
    let Some(nvars) = gens.first().map(MultiPoly::nvars) else {
        return Vec::new();
    };
    let mut engine = Engine {
        ord: order,
        polys: Vec::new(),
        active: Vec::new(),
        pairs: Vec::new(),
    };
    for g in gens {
        let p = IPoly::from_multi(g, order);
        let r = reduce(&p, &engine.basis(), order);
        if !r.is_zero() {
            engine.update(r);
        }
    }
    while let Some(pair) = engine.next_pair() {
        let s = s_poly(&engine.polys[pair.i], &engine.polys[pair.j], engine.ord);
        let r = reduce(&s, &engine.basis(), engine.ord);
        if !r.is_zero() {
            engine.update(r);
        }
    }

    // `active` is already minimal, so no leading term is reducible by the
    // others and full reduction only touches tails
    let minimal: Vec<IPoly> = engine.active.iter().map(|&k| engine.polys[k].clone()).collect();
    let mut reduced: Vec<IPoly> = (0..minimal.len())
        .map(|k| {
            let others: Vec<&IPoly> = minimal
                .iter()
                .enumerate()
                .filter(|&(l, _)| l != k)
                .map(|(_, p)| p)
                .collect();
            reduce(&minimal[k], &others, order)
        })
        .collect();
    reduced.sort_by(|a, b| order.compare(a.lead(), b.lead()));
    reduced.iter().map(|p| p.to_multi(nvars)).collect()
}

fn sorted_terms(p: &MultiPoly, ord: MonomialOrder) -> Vec<(Exponent, Rational)> {
    let mut t: Vec<(Exponent, Rational)> = p.terms().map(|(e, c)| (e.clone(), c.clone())).collect();
    t.sort_by(|a, b| ord.compare(&b.0, &a.0));
    t
}

pub fn leading_monomial(p: &MultiPoly, order: MonomialOrder) -> Option<Exponent> {
    p.terms()
        .map(|(e, _)| e)
        .max_by(|a, b| order.compare(a, b))
        .cloned()
}

/// Exact normal form of `f` modulo `basis` by multivariate division over the
/// rationals.
pub fn normal_form(f: &MultiPoly, basis: &[MultiPoly], order: MonomialOrder) -> MultiPoly {
    let leads: Vec<(Exponent, Rational)> = basis
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| sorted_terms(g, order).swap_remove(0))
        .collect();
    let live: Vec<&MultiPoly> = basis.iter().filter(|g| !g.is_zero()).collect();
    let mut p = f.clone();
    let mut rem = MultiPoly::zero(f.nvars());
    while let Some(lead) = leading_monomial(&p, order) {
        let c = p.coeff(&lead);
        match leads.iter().position(|(e, _)| divides(e, &lead)) {
            Some(k) => {
                let shift = sub_mono(&lead, &leads[k].0);
                let q = MultiPoly::monomial(shift, &c / &leads[k].1);
                p = &p - &(&q * live[k]);
            }
            None => {
                p.add_term(lead.clone(), -c.clone());
                rem.add_term(lead, c);
            }
        }
    }
    rem
}

pub fn s_polynomial(f: &MultiPoly, g: &MultiPoly, order: MonomialOrder) -> MultiPoly {
    let (ef, cf) = sorted_terms(f, order).swap_remove(0);
    let (eg, cg) = sorted_terms(g, order).swap_remove(0);
    let l = lcm_mono(&ef, &eg);
    let mf = MultiPoly::monomial(sub_mono(&l, &ef), cf.recip());
    let mg = MultiPoly::monomial(sub_mono(&l, &eg), cg.recip());
    &(&mf * f) - &(&mg * g)
}

/// Buchberger's criterion: every S-polynomial reduces to zero.
pub fn is_groebner_basis(basis: &[MultiPoly], order: MonomialOrder) -> bool {
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            let s = s_polynomial(&basis[i], &basis[j], order);
            if !normal_form(&s, basis, order).is_zero() {
                return false;
            }
        }
    }
    true
}
