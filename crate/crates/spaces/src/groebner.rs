//! Buchberger's algorithm with the normal pair-selection strategy, the
//! coprime and chain criteria, full inter-reduction, and Rabinowitsch-style
//! saturation. Resource caps are explicit errors, never silent truncation.

use crate::coeff::Field;
use crate::error::{Error, Result};
use crate::json::{poly_to_json, JsonCoeff};
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::MultiPoly;
use serde_json::{json, Value};
use std::cmp::Reverse;
use std::collections::{BTreeSet, BinaryHeap};

#[derive(Clone, Debug)]
pub struct Ideal<K: Field> {
    pub generators: Vec<MultiPoly<K>>,
    /// Factors inverted via a fresh variable; kept for provenance.
    pub saturation_factors: Vec<MultiPoly<K>>,
}

impl<K: Field> Ideal<K> {
    pub fn new(generators: Vec<MultiPoly<K>>) -> Result<Self> {
        if generators.iter().any(|g| g.is_zero()) {
            return Err(Error::ZeroInput("zero ideal generator".into()));
        }
        Ok(Ideal {
            generators: generators.iter().map(|g| g.primitive()).collect(),
            saturation_factors: vec![],
        })
    }

    /// Invert `factor` by adjoining a fresh variable `z` placed first in the
    /// order and the generator `z*factor - 1`.
    pub fn saturate(&self, factor: &MultiPoly<K>, fresh: &str) -> Result<Self> {
        if factor.is_zero() {
            return Err(Error::ZeroInput("saturation by zero factor".into()));
        }
        let mut generators = Vec::with_capacity(self.generators.len() + 1);
        for g in &self.generators {
            generators.push(g.extend_var_front(fresh)?);
        }
        let factor_ext = factor.extend_var_front(fresh)?;
        let ctx = factor_ext.ctx.clone();
        let z = MultiPoly::var(ctx.clone(), 0);
        let rabinowitsch = z.mul(&factor_ext)?.sub(&MultiPoly::one(ctx))?;
        generators.push(rabinowitsch);
        let mut saturation_factors: Vec<MultiPoly<K>> = self
            .saturation_factors
            .iter()
            .map(|f| f.extend_var_front(fresh))
            .collect::<Result<_>>()?;
        saturation_factors.push(factor_ext);
        Ok(Ideal {
            generators,
            saturation_factors,
        })
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct PairStats {
    pub considered: usize,
    pub skipped_coprime: usize,
    pub skipped_chain: usize,
    pub reduced_to_zero: usize,
    pub basis_additions: usize,
}

#[derive(Clone, Debug)]
pub struct GroebnerBasis<K: Field> {
    pub basis: Vec<MultiPoly<K>>,
    pub order: MonomialOrder,
    pub reduced: bool,
    pub stats: PairStats,
    pub saturation_factors: Vec<MultiPoly<K>>,
}

/// Caps on the Buchberger main loop. Exceeding a cap aborts with
/// `Error::BudgetExceeded`.
#[derive(Clone, Copy, Debug)]
pub struct GbBudget {
    pub max_pairs: usize,
    pub max_basis_terms: usize,
}

impl Default for GbBudget {
    fn default() -> Self {
        let read = |key: &str, dflt: usize| {
            std::env::var(key)
                .ok()
                .and_then(|v| v.parse().ok())
                .unwrap_or(dflt)
        };
        GbBudget {
            max_pairs: read("SPACES_GB_MAX_PAIRS", 500_000),
            max_basis_terms: read("SPACES_GB_MAX_TERMS", 4_000_000),
        }
    }
}

pub fn s_polynomial<K: Field>(f: &MultiPoly<K>, g: &MultiPoly<K>) -> Result<MultiPoly<K>> {
    let (mf, cf) = f
        .leading()
        .ok_or_else(|| Error::ZeroInput("S-polynomial of zero".into()))?;
    let (mg, cg) = g
        .leading()
        .ok_or_else(|| Error::ZeroInput("S-polynomial of zero".into()))?;
    let lcm = mf.lcm(mg);
    let a = f.mul_term(&mf.div_into(&lcm), &cf.inv().expect("nonzero leading"));
    let b = g.mul_term(&mg.div_into(&lcm), &cg.inv().expect("nonzero leading"));
    a.sub(&b)
}

/// Index of the reducer for term `m`: leading monomial divides `m`, ties
/// broken by smallest leading monomial, then lowest index.
fn pick_divisor<K: Field>(
    basis: &[MultiPoly<K>],
    alive: &[bool],
    m: &Monomial,
    order: MonomialOrder,
) -> Option<usize> {
    let mut best: Option<usize> = None;
    for (i, b) in basis.iter().enumerate() {
        if !alive[i] {
            continue;
        }
        let (lm, _) = b.leading()?;
        if !lm.divides(m) {
            continue;
        }
        best = match best {
            None => Some(i),
            Some(j) => {
                let (jm, _) = basis[j].leading().unwrap();
                if lm.cmp_under(jm, order) == std::cmp::Ordering::Less {
                    Some(i)
                } else {
                    Some(j)
                }
            }
        };
    }
    best
}

/// Full multivariate division: returns the remainder (no term divisible by
/// any basis leading monomial) and the quotients, so that
/// `p = Σ quotients[i] * basis[i] + remainder` exactly.
pub fn normal_form<K: Field>(
    p: &MultiPoly<K>,
    basis: &[MultiPoly<K>],
) -> Result<(MultiPoly<K>, Vec<MultiPoly<K>>)> {
    let ctx = p.ctx.clone();
    let order = ctx.order;
    let alive = vec![true; basis.len()];
    let mut quotients = vec![MultiPoly::zero(ctx.clone()); basis.len()];
    let mut work = p.clone();
    let mut rem_terms: Vec<(Monomial, K)> = Vec::new();
    while let Some((m, c)) = work.leading().map(|(m, c)| (m.clone(), c.clone())) {
        match pick_divisor(basis, &alive, &m, order) {
            Some(i) => {
                let (bm, bc) = basis[i].leading().unwrap();
                let qm = bm.div_into(&m);
                let qc = c.mul(&bc.inv().expect("nonzero leading"));
                work = work.sub(&basis[i].mul_term(&qm, &qc))?;
                quotients[i] = quotients[i].add(&MultiPoly::from_terms(
                    ctx.clone(),
                    vec![(qm, qc)],
                ))?;
            }
            None => {
                rem_terms.push((m, c));
                work = work.sub(&MultiPoly::from_terms(
                    ctx.clone(),
                    vec![rem_terms.last().unwrap().clone()],
                ))?;
            }
        }
    }
    Ok((MultiPoly::from_terms(ctx, rem_terms), quotients))
}

/// Remainder only, with periodic content stripping for coefficient control.
/// The result equals a nonzero scalar multiple of the true normal form, which
/// is all Buchberger needs.
fn reduce_primitive<K: Field>(
    p: &MultiPoly<K>,
    basis: &[MultiPoly<K>],
    alive: &[bool],
) -> Result<MultiPoly<K>> {
    let ctx = p.ctx.clone();
    let order = ctx.order;
    let mut work = p.clone();
    let mut rem_terms: Vec<(Monomial, K)> = Vec::new();
    let mut steps = 0usize;
    while let Some((m, c)) = work.leading().map(|(m, c)| (m.clone(), c.clone())) {
        match pick_divisor(basis, alive, &m, order) {
            Some(i) => {
                let (bm, bc) = basis[i].leading().unwrap();
                let qm = bm.div_into(&m);
                let qc = c.mul(&bc.inv().expect("nonzero leading"));
                work = work.sub(&basis[i].mul_term(&qm, &qc))?;
                steps += 1;
                if steps % 16 == 0 && rem_terms.is_empty() && !work.is_zero() {
                    work = work.primitive();
                }
            }
            None => {
                rem_terms.push((m, c));
                work = work.sub(&MultiPoly::from_terms(
                    ctx.clone(),
                    vec![rem_terms.last().unwrap().clone()],
                ))?;
            }
        }
    }
    let r = MultiPoly::from_terms(ctx, rem_terms);
    if r.is_zero() {
        Ok(r)
    } else {
        Ok(r.primitive())
    }
}

type PairKey = (u32, Vec<u32>, usize, usize);

fn pair_key<K: Field>(basis: &[MultiPoly<K>], i: usize, j: usize) -> PairKey {
    let lm_i = &basis[i].leading().unwrap().0;
    let lm_j = &basis[j].leading().unwrap().0;
    let l = lm_i.lcm(lm_j);
    (l.total_degree(), l.exps, i, j)
}

pub fn buchberger<K: Field>(ideal: &Ideal<K>, order: MonomialOrder) -> Result<GroebnerBasis<K>> {
    buchberger_with(ideal, order, GbBudget::default())
}

pub fn buchberger_with<K: Field>(
    ideal: &Ideal<K>,
    order: MonomialOrder,
    budget: GbBudget,
) -> Result<GroebnerBasis<K>> {
    let mut basis: Vec<MultiPoly<K>> = ideal
        .generators
        .iter()
        .map(|g| g.with_order(order).primitive())
        .collect();
    if basis.is_empty() {
        return Err(Error::ZeroInput("empty generator set".into()));
    }
    let mut alive = vec![true; basis.len()];
    let mut stats = PairStats::default();

    // Min-heap on (lcm degree, lcm exponents, i, j): the normal strategy.
    let mut heap: BinaryHeap<Reverse<PairKey>> = BinaryHeap::new();
    let mut pending: BTreeSet<(usize, usize)> = BTreeSet::new();
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            heap.push(Reverse(pair_key(&basis, i, j)));
            pending.insert((i, j));
        }
    }

    while let Some(Reverse((_, lcm_exps, i, j))) = heap.pop() {
        if !pending.remove(&(i, j)) || !alive[i] || !alive[j] {
            continue;
        }
        stats.considered += 1;
        if stats.considered > budget.max_pairs {
            return Err(Error::BudgetExceeded(format!(
                "pair budget {} exhausted",
                budget.max_pairs
            )));
        }
        let lm_i = &basis[i].leading().unwrap().0;
        let lm_j = &basis[j].leading().unwrap().0;
        if lm_i.coprime(lm_j) {
            stats.skipped_coprime += 1;
            continue;
        }
        let lcm = Monomial { exps: lcm_exps };
        // Chain criterion: skip if some other element's leading monomial
        // divides the lcm and both side pairs are already dispatched.
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && alive[k]
                && basis[k].leading().unwrap().0.divides(&lcm)
                && !pending.contains(&(i.min(k), i.max(k)))
                && !pending.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            stats.skipped_chain += 1;
            continue;
        }
        let s = s_polynomial(&basis[i], &basis[j])?;
        let r = reduce_primitive(&s, &basis, &alive)?;
        if r.is_zero() {
            stats.reduced_to_zero += 1;
            continue;
        }
        // Superseded elements are kept alive during the run (retiring them
        // invalidates chain bookkeeping); inter-reduction prunes at the end.
        let new_idx = basis.len();
        basis.push(r);
        alive.push(true);
        stats.basis_additions += 1;
        if std::env::var("SPACES_GB_TRACE").is_ok() {
            let p = basis.last().unwrap();
            let digits = p
                .terms()
                .iter()
                .map(|(_, c)| format!("{c}").len())
                .max()
                .unwrap_or(0);
            eprintln!(
                "gb: basis[{}] lm {:?} terms {} max-coeff-chars {} pending {} considered {}",
                new_idx,
                p.leading().unwrap().0.exps,
                p.term_count(),
                digits,
                pending.len(),
                stats.considered
            );
        }
        let total_terms: usize = basis.iter().map(|b| b.term_count()).sum();
        if total_terms > budget.max_basis_terms {
            return Err(Error::BudgetExceeded(format!(
                "term budget {} exhausted ({} terms)",
                budget.max_basis_terms, total_terms
            )));
        }
        for k in 0..new_idx {
            if alive[k] {
                heap.push(Reverse(pair_key(&basis, k, new_idx)));
                pending.insert((k, new_idx));
            }
        }
    }

    let reduced = inter_reduce(basis, order)?;
    Ok(GroebnerBasis {
        basis: reduced,
        order,
        reduced: true,
        stats,
        saturation_factors: ideal
            .saturation_factors
            .iter()
            .map(|f| f.with_order(order))
            .collect(),
    })
}

/// Minimal, monic, fully reduced basis sorted by ascending leading monomial.
fn inter_reduce<K: Field>(
    mut basis: Vec<MultiPoly<K>>,
    order: MonomialOrder,
) -> Result<Vec<MultiPoly<K>>> {
    // Drop elements whose leading monomial another element's divides.
    basis.sort_by(|a, b| {
        a.leading()
            .unwrap()
            .0
            .cmp_under(&b.leading().unwrap().0, order)
    });
    let mut keep: Vec<MultiPoly<K>> = Vec::new();
    'outer: for b in basis {
        let lm = b.leading().unwrap().0.clone();
        for k in &keep {
            if k.leading().unwrap().0.divides(&lm) {
                continue 'outer;
            }
        }
        keep.push(b);
    }
    // Reduce every element modulo the others until stable.
    loop {
        let mut changed = false;
        for i in 0..keep.len() {
            let others: Vec<MultiPoly<K>> = keep
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, p)| p.clone())
                .collect();
            let alive = vec![true; others.len()];
            let r = reduce_primitive(&keep[i], &others, &alive)?;
            if r.is_zero() {
                keep.remove(i);
                changed = true;
                break;
            }
            if r != keep[i] {
                keep[i] = r;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    keep.sort_by(|a, b| {
        a.leading()
            .unwrap()
            .0
            .cmp_under(&b.leading().unwrap().0, order)
    });
    Ok(keep.into_iter().map(|p| p.monic()).collect())
}

impl<K: Field> GroebnerBasis<K> {
    /// True iff the basis contains a nonzero constant.
    pub fn is_trivial(&self) -> bool {
        self.basis.iter().any(|b| b.is_constant() && !b.is_zero())
    }

    /// Minimal-degree basis element supported only on `keep_var`, or None if
    /// the elimination ideal in that variable is zero. Requires a lex basis
    /// with `keep_var` last.
    pub fn elimination_polynomial(&self, keep_var: usize) -> Option<&MultiPoly<K>> {
        self.basis
            .iter()
            .filter(|b| {
                !b.is_zero()
                    && b.support_vars()
                        .iter()
                        .all(|&v| v == keep_var)
            })
            .min_by_key(|b| b.degree_in(keep_var))
    }

    pub fn elimination_polynomial_named(&self, name: &str) -> Option<&MultiPoly<K>> {
        let idx = self.basis.first()?.ctx.var_index(name)?;
        self.elimination_polynomial(idx)
    }
}

/// Monomial wrapper ordered under a fixed target order, for FGLM queues.
#[derive(Clone, PartialEq, Eq)]
struct Keyed(Monomial, MonomialOrder);

impl Ord for Keyed {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0.cmp_under(&other.0, self.1)
    }
}

impl PartialOrd for Keyed {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// All monomials outside the leading-term ideal of a zero-dimensional basis,
/// i.e. the monomial basis of the quotient ring.
fn standard_monomials<K: Field>(
    basis: &[MultiPoly<K>],
    cap: usize,
) -> Result<Vec<Monomial>> {
    let nvars = basis[0].ctx.vars.len();
    let lms: Vec<&Monomial> = basis.iter().map(|b| &b.leading().unwrap().0).collect();
    for v in 0..nvars {
        let pure = lms
            .iter()
            .any(|m| m.exps.iter().enumerate().all(|(i, e)| *e == 0 || i == v));
        if !pure {
            return Err(Error::NotZeroDimensional(format!(
                "no pure power of `{}` among leading monomials",
                basis[0].ctx.vars[v]
            )));
        }
    }
    let mut seen: BTreeSet<Vec<u32>> = BTreeSet::new();
    let mut queue = vec![Monomial::one(nvars)];
    let mut out = Vec::new();
    while let Some(m) = queue.pop() {
        if !seen.insert(m.exps.clone()) {
            continue;
        }
        if lms.iter().any(|lm| lm.divides(&m)) {
            continue;
        }
        out.push(m.clone());
        if out.len() > cap {
            return Err(Error::BudgetExceeded(format!(
                "quotient dimension exceeds {cap}"
            )));
        }
        for v in 0..nvars {
            queue.push(m.mul(&Monomial::var(nvars, v)));
        }
    }
    Ok(out)
}

/// FGLM change of monomial order for a zero-dimensional ideal: converts a
/// reduced Gröbner basis into the reduced basis under `target` by linear
/// algebra in the quotient ring. Far cheaper than a direct lex Buchberger
/// run when coefficients swell.
pub fn fglm<K: Field>(gb: &GroebnerBasis<K>, target: MonomialOrder) -> Result<GroebnerBasis<K>> {
    if gb.basis.is_empty() {
        return Err(Error::ZeroInput("empty basis".into()));
    }
    let ctx = gb.basis[0].ctx.clone();
    let nvars = ctx.vars.len();
    let finish = |basis: Vec<MultiPoly<K>>| GroebnerBasis {
        basis,
        order: target,
        reduced: true,
        stats: gb.stats,
        saturation_factors: gb
            .saturation_factors
            .iter()
            .map(|f| f.with_order(target))
            .collect(),
    };
    if gb.is_trivial() {
        return Ok(finish(vec![MultiPoly::one(ctx).with_order(target)]));
    }
    let standard = standard_monomials(&gb.basis, GbBudget::default().max_basis_terms)?;
    let dim = standard.len();
    let index: std::collections::HashMap<Vec<u32>, usize> = standard
        .iter()
        .enumerate()
        .map(|(i, m)| (m.exps.clone(), i))
        .collect();
    let vector_of = |p: &MultiPoly<K>| -> Result<Vec<K>> {
        let mut v = vec![K::zero(); dim];
        for (m, c) in p.terms() {
            let i = *index.get(&m.exps).ok_or_else(|| {
                Error::ContextMismatch("normal form left the quotient basis".into())
            })?;
            v[i] = c.clone();
        }
        Ok(v)
    };

    // Target-order staircase monomials with their normal-form vectors.
    let mut stair: Vec<Monomial> = Vec::new();
    let mut stair_vec: Vec<Vec<K>> = Vec::new();
    let mut stair_idx: std::collections::HashMap<Vec<u32>, usize> =
        std::collections::HashMap::new();
    // Row echelon over the quotient: rows plus their expressions in `stair`.
    let mut ech: Vec<(usize, Vec<K>, Vec<K>)> = Vec::new(); // (pivot, row, combo)
    let mut new_basis: Vec<MultiPoly<K>> = Vec::new();
    let mut new_lms: Vec<Monomial> = Vec::new();

    let mut queue: BTreeSet<Keyed> = BTreeSet::new();
    queue.insert(Keyed(Monomial::one(nvars), target));
    // Parent pointers: candidate -> (staircase index, multiplied variable).
    let mut parent: std::collections::HashMap<Vec<u32>, (usize, usize)> =
        std::collections::HashMap::new();

    while let Some(Keyed(m, _)) = queue.pop_first() {
        if new_lms.iter().any(|lm| lm.divides(&m)) || stair_idx.contains_key(&m.exps) {
            continue;
        }
        let p = if m.is_one() {
            MultiPoly::one(ctx.clone())
        } else {
            let (si, var) = *parent
                .get(&m.exps)
                .expect("candidate enqueued without parent");
            let xi = Monomial::var(nvars, var);
            let shifted = MultiPoly::from_terms(
                ctx.clone(),
                standard
                    .iter()
                    .zip(&stair_vec[si])
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(s, c)| (s.mul(&xi), c.clone()))
                    .collect(),
            );
            normal_form(&shifted, &gb.basis)?.0
        };
        let v = vector_of(&p)?;
        // Incremental Gaussian elimination, tracking the combination.
        let mut r = v.clone();
        let mut u = vec![K::zero(); stair.len()];
        for (pivot, row, combo) in &ech {
            if r[*pivot].is_zero() {
                continue;
            }
            let f = r[*pivot].clone();
            for (a, b) in r.iter_mut().zip(row) {
                *a = a.sub(&f.mul(b));
            }
            for (a, b) in u.iter_mut().zip(combo) {
                *a = a.add(&f.mul(b));
            }
        }
        match r.iter().position(|c| !c.is_zero()) {
            None => {
                // Dependent: m - Σ u_k · stair_k is a new basis element.
                let mut terms = vec![(m.clone(), K::one())];
                for (s, c) in stair.iter().zip(&u) {
                    if !c.is_zero() {
                        terms.push((s.clone(), c.neg()));
                    }
                }
                let mut g = MultiPoly::from_terms(ctx.clone(), terms);
                g = g.with_order(target);
                new_lms.push(m);
                new_basis.push(g);
            }
            Some(pivot) => {
                let inv = r[pivot].inv().expect("nonzero pivot");
                let row: Vec<K> = r.iter().map(|c| c.mul(&inv)).collect();
                let mut combo: Vec<K> = u.iter().map(|c| c.neg().mul(&inv)).collect();
                combo.push(inv);
                // Keep earlier combos aligned with the grown staircase, and
                // clear the new pivot from all rows (full Gauss–Jordan), so
                // one elimination pass suffices for every later vector.
                for (_, erow, ecombo) in ech.iter_mut() {
                    ecombo.push(K::zero());
                    if erow[pivot].is_zero() {
                        continue;
                    }
                    let f = erow[pivot].clone();
                    for (a, b) in erow.iter_mut().zip(&row) {
                        *a = a.sub(&f.mul(b));
                    }
                    for (a, b) in ecombo.iter_mut().zip(&combo) {
                        *a = a.sub(&f.mul(b));
                    }
                }
                let si = stair.len();
                stair_idx.insert(m.exps.clone(), si);
                stair.push(m.clone());
                stair_vec.push(v);
                ech.push((pivot, row, combo));
                if stair.len() > dim {
                    return Err(Error::NotZeroDimensional(
                        "staircase exceeded quotient dimension".into(),
                    ));
                }
                for var in 0..nvars {
                    let cand = m.mul(&Monomial::var(nvars, var));
                    if queue.insert(Keyed(cand.clone(), target)) {
                        parent.insert(cand.exps, (si, var));
                    }
                }
            }
        }
    }
    new_basis.sort_by(|a, b| {
        a.leading()
            .unwrap()
            .0
            .cmp_under(&b.leading().unwrap().0, target)
    });
    Ok(finish(new_basis))
}

/// GrevLex Buchberger followed by FGLM: the fast route to a reduced lex
/// basis of a zero-dimensional ideal.
pub fn lex_groebner<K: Field>(ideal: &Ideal<K>) -> Result<GroebnerBasis<K>> {
    let grev = buchberger(ideal, MonomialOrder::GrevLex)?;
    fglm(&grev, MonomialOrder::Lex)
}

fn drop_var_front<K: Field>(p: &MultiPoly<K>, order: MonomialOrder) -> MultiPoly<K> {
    let vars: Vec<&str> = p.ctx.vars.iter().skip(1).map(|s| s.as_str()).collect();
    let c = crate::poly::ctx(&vars, order);
    MultiPoly::from_terms(
        c,
        p.terms()
            .iter()
            .map(|(m, k)| {
                (
                    Monomial {
                        exps: m.exps[1..].to_vec(),
                    },
                    k.clone(),
                )
            })
            .collect(),
    )
}

/// Generators of the saturation I : f^∞ back in the original context: adjoin
/// a fresh inverse variable, run Buchberger under the single-variable
/// elimination block order, and keep the basis elements free of the fresh
/// variable. Cheaper than inverting a product of factors at once.
pub fn saturation_generators<K: Field>(
    gens: &[MultiPoly<K>],
    factor: &MultiPoly<K>,
    fresh: &str,
) -> Result<Vec<MultiPoly<K>>> {
    let order = gens
        .first()
        .ok_or_else(|| Error::ZeroInput("empty generator set".into()))?
        .ctx
        .order;
    let ideal = Ideal::new(gens.to_vec())?.saturate(factor, fresh)?;
    let ideal = Ideal {
        generators: ideal
            .generators
            .iter()
            .map(|g| g.with_order(MonomialOrder::ElimFirst))
            .collect(),
        saturation_factors: ideal.saturation_factors,
    };
    let gb = buchberger(&ideal, MonomialOrder::ElimFirst)?;
    Ok(gb
        .basis
        .iter()
        .filter(|b| b.leading().unwrap().0.exps[0] == 0)
        .map(|b| drop_var_front(b, order))
        .collect())
}

/// Iterated saturation by each factor in turn.
pub fn saturate_chain<K: Field>(
    gens: &[MultiPoly<K>],
    factors: &[MultiPoly<K>],
    fresh: &str,
) -> Result<Vec<MultiPoly<K>>> {
    let mut cur = gens.to_vec();
    for f in factors {
        cur = saturation_generators(&cur, f, fresh)?;
        if cur.is_empty() {
            return Err(Error::ZeroInput("saturation emptied the ideal".into()));
        }
    }
    Ok(cur)
}

/// Buchberger criterion: every S-polynomial reduces to zero. Used as a
/// post-hoc soundness check in tests and `verify` runs.
pub fn is_groebner<K: Field>(basis: &[MultiPoly<K>]) -> Result<bool> {
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            let s = s_polynomial(&basis[i], &basis[j])?;
            let (r, _) = normal_form(&s, basis)?;
            if !r.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Result-file payload: basis, order, strategy, pair statistics, and
/// saturation provenance.
pub fn gb_report<K: JsonCoeff>(gb: &GroebnerBasis<K>) -> Value {
    json!({
        "order": gb.order.name(),
        "strategy": "normal",
        "reduced": gb.reduced,
        "pair_stats": {
            "considered": gb.stats.considered,
            "skipped_coprime": gb.stats.skipped_coprime,
            "skipped_chain": gb.stats.skipped_chain,
            "reduced_to_zero": gb.stats.reduced_to_zero,
            "basis_additions": gb.stats.basis_additions,
        },
        "saturation_factors": gb.saturation_factors.iter().map(poly_to_json).collect::<Vec<_>>(),
        "basis": gb.basis.iter().map(poly_to_json).collect::<Vec<_>>(),
    })
}
