//! Isotropy decompositions with bracket triples, the Ricci-component
//! builder, Einstein-system construction with denominator clearing, scalar
//! curvature, and an exact so(N) matrix oracle that derives dimensions and
//! triples from explicit skew-symmetric bases.

use crate::coeff::{rat, Field, Rat};
use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialOrder};
use crate::parampoly::{ParamPoly, RatFunc};
use crate::poly::{ctx, Ctx, MultiPoly};
use crate::ratio::Ratio;
use num::Signed;
use std::collections::BTreeMap;

/// Coefficients that can report sample sign information: exact rationals
/// probe themselves, parametric coefficients probe at sample values of n.
pub trait Probe: Field {
    fn probe_values(&self, samples: &[Rat]) -> Vec<Rat>;
}

impl Probe for Rat {
    fn probe_values(&self, _samples: &[Rat]) -> Vec<Rat> {
        vec![self.clone()]
    }
}

impl Probe for RatFunc {
    fn probe_values(&self, samples: &[Rat]) -> Vec<Rat> {
        samples.iter().filter_map(|n| self.eval(n)).collect()
    }
}

#[derive(Clone, Debug)]
pub struct Summand<K: Field> {
    /// Human-readable name, e.g. "so(k2)" or "m12".
    pub label: String,
    /// Metric variable bound to this summand, e.g. "x2".
    pub var: String,
    pub dim: K,
}

/// Decomposition of the tangent space into irreducible summands with the
/// bracket triples [k|ij]. Triples are fully symmetric; one value is stored
/// per sorted index triple and expanded on read.
#[derive(Clone, Debug)]
pub struct IsotropyDecomposition<K: Field> {
    pub summands: Vec<Summand<K>>,
    triples: BTreeMap<[usize; 3], K>,
    conflicts: Vec<String>,
}

fn sorted_key(k: usize, i: usize, j: usize) -> [usize; 3] {
    let mut key = [k, i, j];
    key.sort_unstable();
    key
}

impl<K: Field> IsotropyDecomposition<K> {
    pub fn new(summands: Vec<Summand<K>>) -> Self {
        IsotropyDecomposition {
            summands,
            triples: BTreeMap::new(),
            conflicts: vec![],
        }
    }

    pub fn q(&self) -> usize {
        self.summands.len()
    }

    pub fn dim(&self, k: usize) -> &K {
        &self.summands[k].dim
    }

    /// Record [k|ij]; a conflicting value for a symmetric image is kept as a
    /// violation for `validate` rather than silently overwritten.
    pub fn set_triple(&mut self, k: usize, i: usize, j: usize, v: K) {
        let key = sorted_key(k, i, j);
        match self.triples.get(&key) {
            Some(old) if *old != v => self.conflicts.push(format!(
                "conflicting values for triple [{}|{}{}]: {old} vs {v}",
                self.summands[k].label, self.summands[i].label, self.summands[j].label
            )),
            _ => {
                self.triples.insert(key, v);
            }
        }
    }

    pub fn triple(&self, k: usize, i: usize, j: usize) -> K {
        self.triples
            .get(&sorted_key(k, i, j))
            .cloned()
            .unwrap_or_else(K::zero)
    }

    /// Stored orbits (sorted keys) with their values.
    pub fn triple_orbits(&self) -> impl Iterator<Item = (&[usize; 3], &K)> {
        self.triples.iter()
    }

    /// Context with one metric variable per summand, in summand order.
    pub fn metric_ctx(&self, order: MonomialOrder) -> Ctx {
        let vars: Vec<&str> = self.summands.iter().map(|s| s.var.as_str()).collect();
        ctx(&vars, order)
    }
}

impl<K: Probe> IsotropyDecomposition<K> {
    /// Report-style validation: symmetry conflicts, dim positivity, and
    /// triple non-negativity at the probe samples. Empty report = valid.
    pub fn validate(&self, samples: &[Rat]) -> Vec<String> {
        let mut report = self.conflicts.clone();
        for s in &self.summands {
            for v in s.dim.probe_values(samples) {
                if !v.is_positive() {
                    report.push(format!("dim of {} is {v}, not positive", s.label));
                }
            }
        }
        for (key, t) in &self.triples {
            for v in t.probe_values(samples) {
                if v.is_negative() {
                    report.push(format!(
                        "triple [{}|{}{}] is {v}, negative",
                        self.summands[key[0]].label,
                        self.summands[key[1]].label,
                        self.summands[key[2]].label
                    ));
                }
            }
        }
        report
    }
}

/// Symbolic Ricci components:
/// r_k = 1/(2x_k) + (1/(4d_k)) Σ_{j,i} (x_k/(x_j x_i)) [k|ji]
///               − (1/(2d_k)) Σ_{j,i} (x_j/(x_k x_i)) [j|ki],
/// both sums over all ordered pairs (j, i).
pub fn ricci_components<K: Field>(d: &IsotropyDecomposition<K>) -> Result<Vec<Ratio<K>>> {
    let q = d.q();
    let c = d.metric_ctx(MonomialOrder::Lex);
    let x: Vec<MultiPoly<K>> = (0..q).map(|i| MultiPoly::var(c.clone(), i)).collect();
    let mut out = Vec::with_capacity(q);
    for k in 0..q {
        let dk_inv = d
            .dim(k)
            .inv()
            .ok_or_else(|| Error::BadCase(format!("zero dim for {}", d.summands[k].label)))?;
        let mut r = Ratio::new(MultiPoly::one(c.clone()), x[k].scale(&K::from_int(2)))?;
        for j in 0..q {
            for i in 0..q {
                let t1 = d.triple(k, j, i);
                if !t1.is_zero() {
                    let coeff = t1.mul(&dk_inv).mul(&K::from_int(4).inv().unwrap());
                    let term = Ratio::new(x[k].scale(&coeff), x[j].mul(&x[i])?)?;
                    r = r.add(&term)?;
                }
                let t2 = d.triple(j, k, i);
                if !t2.is_zero() {
                    let coeff = t2.mul(&dk_inv).mul(&K::from_int(2).inv().unwrap());
                    let term = Ratio::new(x[j].scale(&coeff), x[k].mul(&x[i])?)?;
                    r = r.sub(&term)?;
                }
            }
        }
        out.push(r);
    }
    Ok(out)
}

/// Exact evaluation of a ratio at a point.
pub fn eval_ratio<K: Field>(r: &Ratio<K>, values: &[K]) -> Result<K> {
    let den = r.den.evaluate(values)?;
    let num = r.num.evaluate(values)?;
    den.inv()
        .map(|inv| num.mul(&inv))
        .ok_or_else(|| Error::ZeroInput("ratio denominator vanishes at point".into()))
}

/// S = Σ_k d_k r_k as a symbolic ratio.
pub fn scalar_curvature<K: Field>(d: &IsotropyDecomposition<K>) -> Result<Ratio<K>> {
    let rs = ricci_components(d)?;
    let c = d.metric_ctx(MonomialOrder::Lex);
    let mut s = Ratio::zero(c);
    for (k, r) in rs.iter().enumerate() {
        s = s.add(&r.scale(d.dim(k)))?;
    }
    Ok(s)
}

/// The traced closed form (1/2)Σ d_k/x_k − (1/4)Σ_{i,j,k} [k|ij] x_k/(x_i x_j).
pub fn scalar_curvature_traced<K: Field>(d: &IsotropyDecomposition<K>) -> Result<Ratio<K>> {
    let q = d.q();
    let c = d.metric_ctx(MonomialOrder::Lex);
    let x: Vec<MultiPoly<K>> = (0..q).map(|i| MultiPoly::var(c.clone(), i)).collect();
    let mut s = Ratio::zero(c.clone());
    let half = K::from_int(2).inv().unwrap();
    let quarter = K::from_int(4).inv().unwrap();
    for k in 0..q {
        s = s.add(&Ratio::new(
            MultiPoly::constant(c.clone(), d.dim(k).mul(&half)),
            x[k].clone(),
        )?)?;
    }
    for k in 0..q {
        for i in 0..q {
            for j in 0..q {
                let t = d.triple(k, i, j);
                if !t.is_zero() {
                    let term = Ratio::new(x[k].scale(&t.mul(&quarter)), x[i].mul(&x[j])?)?;
                    s = s.sub(&term)?;
                }
            }
        }
    }
    Ok(s)
}

/// Divide out the largest monomial dividing every term.
pub fn strip_monomial_content<K: Field>(p: &MultiPoly<K>) -> MultiPoly<K> {
    let terms = p.terms();
    if terms.is_empty() {
        return p.clone();
    }
    let nvars = p.ctx.vars.len();
    let mut min = terms[0].0.exps.clone();
    for (m, _) in terms.iter().skip(1) {
        for v in 0..nvars {
            min[v] = min[v].min(m.exps[v]);
        }
    }
    if min.iter().all(|&e| e == 0) {
        return p.clone();
    }
    let g = Monomial { exps: min };
    MultiPoly::from_terms(
        p.ctx.clone(),
        terms
            .iter()
            .map(|(m, c)| (g.div_into(m), c.clone()))
            .collect(),
    )
}

#[derive(Clone, Debug)]
pub struct EinsteinSystem<K: Field> {
    /// Cleared, content-normalized numerators of r_i − r_j per pair.
    pub equations: Vec<MultiPoly<K>>,
    /// Substituted bindings (variable name, value).
    pub normalization: Vec<(String, K)>,
    pub provenance: String,
}

/// Build the Einstein system for a spanning chain of component pairs: each
/// equation is the numerator of r_i − r_j over a common monomial
/// denominator, monomial-stripped and content-normalized, with the
/// normalization substituted.
pub fn einstein_system<K: Field>(
    d: &IsotropyDecomposition<K>,
    pairing: &[(usize, usize)],
    normalization: &[(&str, K)],
    provenance: &str,
) -> Result<EinsteinSystem<K>> {
    let q = d.q();
    // spanning check via union-find
    let mut parent: Vec<usize> = (0..q).collect();
    fn find(parent: &mut Vec<usize>, mut a: usize) -> usize {
        while parent[a] != a {
            parent[a] = parent[parent[a]];
            a = parent[a];
        }
        a
    }
    for &(i, j) in pairing {
        if i >= q || j >= q {
            return Err(Error::BadCase(format!("pair ({i},{j}) out of range")));
        }
        let (ra, rb) = (find(&mut parent, i), find(&mut parent, j));
        parent[ra] = rb;
    }
    let root = find(&mut parent, 0);
    if (1..q).any(|k| find(&mut parent, k) != root) {
        return Err(Error::BadCase("pairing does not connect all summands".into()));
    }

    let rs = ricci_components(d)?;
    let c = d.metric_ctx(MonomialOrder::Lex);
    let bindings: Vec<(&str, MultiPoly<K>)> = normalization
        .iter()
        .map(|(name, v)| (*name, MultiPoly::constant(c.clone(), v.clone())))
        .collect();
    let mut equations = Vec::with_capacity(pairing.len());
    for &(i, j) in pairing {
        let diff = rs[i].sub(&rs[j])?;
        let cleared = strip_monomial_content(&diff.num);
        let substituted = cleared.substitute_named(&bindings)?;
        if substituted.is_zero() {
            continue;
        }
        equations.push(substituted.primitive());
    }
    Ok(EinsteinSystem {
        equations,
        normalization: normalization
            .iter()
            .map(|(n, v)| (n.to_string(), v.clone()))
            .collect(),
        provenance: provenance.to_string(),
    })
}

// ---------------------------------------------------------------------------
// so(N) matrix oracle

/// Dense N×N integer matrix, just big enough for brute-force so(N) work.
#[derive(Clone)]
struct IMat {
    n: usize,
    a: Vec<i64>,
}

impl IMat {
    fn zero(n: usize) -> Self {
        IMat { n, a: vec![0; n * n] }
    }

    fn e_ab(n: usize, a: usize, b: usize) -> Self {
        let mut m = Self::zero(n);
        m.a[a * n + b] = 1;
        m.a[b * n + a] = -1;
        m
    }

    fn mul(&self, rhs: &Self) -> Self {
        let n = self.n;
        let mut out = Self::zero(n);
        for i in 0..n {
            for k in 0..n {
                let v = self.a[i * n + k];
                if v == 0 {
                    continue;
                }
                for j in 0..n {
                    out.a[i * n + j] += v * rhs.a[k * n + j];
                }
            }
        }
        out
    }

    fn sub(&self, rhs: &Self) -> Self {
        IMat {
            n: self.n,
            a: self.a.iter().zip(&rhs.a).map(|(x, y)| x - y).collect(),
        }
    }

    fn commutator(&self, rhs: &Self) -> Self {
        self.mul(rhs).sub(&rhs.mul(self))
    }

    fn trace_mul(&self, rhs: &Self) -> i64 {
        let n = self.n;
        let mut t = 0;
        for i in 0..n {
            for k in 0..n {
                t += self.a[i * n + k] * rhs.a[k * n + i];
            }
        }
        t
    }
}

/// Exact structure constants for the block model of so(N), N = Σ blocks.
/// Diagonal blocks listed in `isotropy_blocks` form the isotropy subalgebra
/// and are excluded from the decomposition; every other diagonal block
/// so(k_i) (omitted when k_i = 1) and every off-diagonal module m_ij is a
/// summand. Triples are accumulated from A² = t²/(8(N−2)) with the integer
/// t = tr([E_α, E_β]·E_γ), relative to the bilinear form (N−2)·tr(XY), so
/// every value is an exact rational.
pub fn so_structure_constants(
    blocks: &[usize],
    isotropy_blocks: &[usize],
) -> Result<IsotropyDecomposition<Rat>> {
    let nblocks = blocks.len();
    let total: usize = blocks.iter().sum();
    if total < 3 {
        return Err(Error::BadCase(format!(
            "so({total}) has a degenerate form; need N >= 3"
        )));
    }
    if blocks.iter().any(|&k| k == 0) || isotropy_blocks.iter().any(|&b| b >= nblocks) {
        return Err(Error::BadCase("bad block description".into()));
    }
    // index ranges per block
    let mut start = Vec::with_capacity(nblocks);
    let mut acc = 0;
    for &k in blocks {
        start.push(acc);
        acc += k;
    }
    let block_of = |idx: usize| -> usize {
        (0..nblocks)
            .rfind(|&b| idx >= start[b])
            .expect("index in range")
    };

    // summand registry: diagonal modules first, then off-diagonal pairs
    let mut summands: Vec<Summand<Rat>> = Vec::new();
    let mut diag_module = vec![None; nblocks];
    for (b, &k) in blocks.iter().enumerate() {
        if isotropy_blocks.contains(&b) || k < 2 {
            continue;
        }
        diag_module[b] = Some(summands.len());
        summands.push(Summand {
            label: format!("so(k{})", b + 1),
            var: format!("x{}", b + 1),
            dim: rat((k * (k - 1) / 2) as i64),
        });
    }
    let mut offdiag_module = vec![vec![None; nblocks]; nblocks];
    for i in 0..nblocks {
        for j in (i + 1)..nblocks {
            offdiag_module[i][j] = Some(summands.len());
            summands.push(Summand {
                label: format!("m{}{}", i + 1, j + 1),
                var: format!("x{}{}", i + 1, j + 1),
                dim: rat((blocks[i] * blocks[j]) as i64),
            });
        }
    }

    // basis of m, tagged with its module
    let mut basis: Vec<(usize, IMat)> = Vec::new();
    for a in 0..total {
        for b in (a + 1)..total {
            let (ba, bb) = (block_of(a), block_of(b));
            let module = if ba == bb {
                diag_module[ba]
            } else {
                offdiag_module[ba][bb]
            };
            if let Some(m) = module {
                basis.push((m, IMat::e_ab(total, a, b)));
            }
        }
    }

    let mut d = IsotropyDecomposition::new(summands);
    let denom = rat((8 * (total - 2)) as i64);
    let q = d.q();
    let mut sums: BTreeMap<[usize; 3], Rat> = BTreeMap::new();
    for (ma, ea) in &basis {
        for (mb, eb) in &basis {
            let comm = ea.commutator(eb);
            for (mc, ec) in &basis {
                let t = comm.trace_mul(ec);
                if t == 0 {
                    continue;
                }
                let key = sorted_key(*ma, *mb, *mc);
                *sums.entry(key).or_insert_with(|| rat(0)) += rat(t * t) / &denom;
            }
        }
    }
    // Each unordered orbit is accumulated once per ordered module pattern;
    // divide by the number of ordered patterns that hit the same sorted key.
    for (key, total_sum) in sums {
        let [a, b, c] = key;
        let patterns: i64 = if a == b && b == c {
            1
        } else if a == b || b == c || a == c {
            3
        } else {
            6
        };
        let value = total_sum / rat(patterns);
        d.set_triple(key[0], key[1], key[2], value);
    }
    debug_assert!(q == d.q());
    Ok(d)
}

/// Parametric decomposition of the Stiefel manifold SO(n)/SO(k₃) with fixed
/// block sizes k₁, k₂ and symbolic k₃ = n − k₁ − k₂: summands so(k₁), so(k₂)
/// (each omitted below dimension 1) and m₁₂, m₁₃, m₂₃, with bracket triples
/// rational in n. Matches the so(N) oracle at every admissible integer n.
pub fn stiefel_decomposition(k1: u32, k2: u32) -> Result<IsotropyDecomposition<RatFunc>> {
    if k1 < 1 || k2 < 1 || k1 > k2 {
        return Err(Error::BadCase(format!(
            "need 1 <= k1 <= k2, got ({k1}, {k2})"
        )));
    }
    let (k1, k2) = (k1 as i64, k2 as i64);
    // k3 = n - k1 - k2 and 2(n-2) as polynomials in n
    let k3 = ParamPoly::new(vec![rat(-(k1 + k2)), rat(1)]);
    let two_nm2 = ParamPoly::new(vec![rat(-4), rat(2)]);
    let frac = |num: ParamPoly, den: ParamPoly| RatFunc::new(num, den);
    let cpoly = |v: i64| ParamPoly::from_int(v);

    let mut summands = Vec::new();
    let mut so1 = None;
    let mut so2 = None;
    if k1 >= 2 {
        so1 = Some(summands.len());
        summands.push(Summand {
            label: "so(k1)".into(),
            var: "x1".into(),
            dim: RatFunc::from_rat(rat(k1 * (k1 - 1) / 2)),
        });
    }
    if k2 >= 2 {
        so2 = Some(summands.len());
        summands.push(Summand {
            label: "so(k2)".into(),
            var: "x2".into(),
            dim: RatFunc::from_rat(rat(k2 * (k2 - 1) / 2)),
        });
    }
    let m12 = summands.len();
    summands.push(Summand {
        label: "m12".into(),
        var: "x12".into(),
        dim: RatFunc::from_rat(rat(k1 * k2)),
    });
    let m13 = summands.len();
    summands.push(Summand {
        label: "m13".into(),
        var: "x13".into(),
        dim: frac(k3.scale(&rat(k1)), cpoly(1)),
    });
    let m23 = summands.len();
    summands.push(Summand {
        label: "m23".into(),
        var: "x23".into(),
        dim: frac(k3.scale(&rat(k2)), cpoly(1)),
    });

    let mut d = IsotropyDecomposition::new(summands);
    if let Some(s1) = so1 {
        if k1 >= 3 {
            // [1|11] = d1 (k1-2)/(n-2)
            let d1 = k1 * (k1 - 1) / 2;
            d.set_triple(
                s1,
                s1,
                s1,
                frac(cpoly(d1 * (k1 - 2)).scale(&rat(2)), two_nm2.clone()),
            );
        }
        d.set_triple(m12, s1, m12, frac(cpoly(k1 * k2 * (k1 - 1)), two_nm2.clone()));
        d.set_triple(
            m13,
            s1,
            m13,
            frac(k3.scale(&rat(k1 * (k1 - 1))), two_nm2.clone()),
        );
    }
    if let Some(s2) = so2 {
        if k2 >= 3 {
            let d2 = k2 * (k2 - 1) / 2;
            d.set_triple(
                s2,
                s2,
                s2,
                frac(cpoly(d2 * (k2 - 2)).scale(&rat(2)), two_nm2.clone()),
            );
        }
        d.set_triple(m12, s2, m12, frac(cpoly(k1 * k2 * (k2 - 1)), two_nm2.clone()));
        d.set_triple(
            m23,
            s2,
            m23,
            frac(k3.scale(&rat(k2 * (k2 - 1))), two_nm2.clone()),
        );
    }
    d.set_triple(m23, m12, m13, frac(k3.scale(&rat(k1 * k2)), two_nm2));
    Ok(d)
}

/// Specialize a parametric decomposition at an exact value of n.
pub fn specialize_decomposition(
    d: &IsotropyDecomposition<RatFunc>,
    n0: &Rat,
) -> Result<IsotropyDecomposition<Rat>> {
    let eval = |f: &RatFunc| f.eval(n0).ok_or_else(|| Error::Pole(format!("{n0}")));
    let summands = d
        .summands
        .iter()
        .map(|s| {
            Ok(Summand {
                label: s.label.clone(),
                var: s.var.clone(),
                dim: eval(&s.dim)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let mut out = IsotropyDecomposition::new(summands);
    for (key, v) in d.triple_orbits() {
        out.set_triple(key[0], key[1], key[2], eval(v)?);
    }
    Ok(out)
}

/// Solve r₁(1,2) = r₂(1,2) for the single unknown bracket [2|11] of a
/// two-summand decomposition with dims (d₁, d₂); the defining property of
/// the Kähler–Einstein normalization.
pub fn bracket_from_kahler_einstein<K: Field>(d1: &K, d2: &K) -> Result<K> {
    let residual = |t: &K| -> Result<K> {
        let mut d = IsotropyDecomposition::new(vec![
            Summand {
                label: "m1".into(),
                var: "x1".into(),
                dim: d1.clone(),
            },
            Summand {
                label: "m2".into(),
                var: "x2".into(),
                dim: d2.clone(),
            },
        ]);
        d.set_triple(1, 0, 0, t.clone());
        let rs = ricci_components(&d)?;
        let point = [K::one(), K::from_int(2)];
        Ok(eval_ratio(&rs[0], &point)?.sub(&eval_ratio(&rs[1], &point)?))
    };
    let a = residual(&K::zero())?;
    let slope = residual(&K::one())?.sub(&a);
    let inv = slope
        .inv()
        .ok_or_else(|| Error::DegenerateSolve("bracket has no effect on r1 - r2".into()))?;
    Ok(a.neg().mul(&inv))
}

/// Solve r₁ = r₂ = r₃ at the Kähler point (1, 2, 3) for the two unknown
/// brackets ([2|11], [3|12]) of a three-summand chain with dims
/// (d₁, d₂, d₃): the A₁(3) analogue of [`bracket_from_kahler_einstein`].
pub fn a13_brackets_from_kahler_einstein<K: Field>(
    d1: &K,
    d2: &K,
    d3: &K,
) -> Result<(K, K)> {
    // r1 - r2 and r2 - r3 at (1, 2, 3) are affine in (t1, t2); sample at
    // (0,0), (1,0), (0,1) and solve the 2x2 linear system exactly.
    let residual = |t1: &K, t2: &K| -> Result<(K, K)> {
        let mut d = IsotropyDecomposition::new(
            [d1, d2, d3]
                .iter()
                .enumerate()
                .map(|(k, dk)| Summand {
                    label: format!("m{}", k + 1),
                    var: format!("x{}", k + 1),
                    dim: (*dk).clone(),
                })
                .collect(),
        );
        d.set_triple(1, 0, 0, t1.clone());
        d.set_triple(2, 0, 1, t2.clone());
        let rs = ricci_components(&d)?;
        let point = [K::one(), K::from_int(2), K::from_int(3)];
        let v: Vec<K> = rs
            .iter()
            .map(|r| eval_ratio(r, &point))
            .collect::<Result<_>>()?;
        Ok((v[0].sub(&v[1]), v[1].sub(&v[2])))
    };
    let (f0, g0) = residual(&K::zero(), &K::zero())?;
    let (f1, g1) = residual(&K::one(), &K::zero())?;
    let (f2, g2) = residual(&K::zero(), &K::one())?;
    let (a1, b1) = (f1.sub(&f0), g1.sub(&g0));
    let (a2, b2) = (f2.sub(&f0), g2.sub(&g0));
    let det = a1.mul(&b2).sub(&a2.mul(&b1));
    let inv = det
        .inv()
        .ok_or_else(|| Error::DegenerateSolve("singular bracket system".into()))?;
    let t1 = a2.mul(&g0).sub(&b2.mul(&f0)).mul(&inv);
    let t2 = b1.mul(&f0).sub(&a1.mul(&g0)).mul(&inv);
    Ok((t1, t2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{rat_frac, rat_parse};

    fn flag_q2(d1: i64, d2: i64) -> IsotropyDecomposition<Rat> {
        let mut d = IsotropyDecomposition::new(vec![
            Summand {
                label: "m1".into(),
                var: "x1".into(),
                dim: rat(d1),
            },
            Summand {
                label: "m2".into(),
                var: "x2".into(),
                dim: rat(d2),
            },
        ]);
        let bracket = rat(d1 * d2) / rat(d1 + 4 * d2);
        d.set_triple(1, 0, 0, bracket);
        d
    }

    #[test]
    fn bracket_free_single_summand() {
        let d = IsotropyDecomposition::new(vec![Summand {
            label: "m".into(),
            var: "x1".into(),
            dim: rat(5),
        }]);
        let rs = ricci_components(&d).unwrap();
        let c = d.metric_ctx(MonomialOrder::Lex);
        let expect = Ratio::new(
            MultiPoly::<Rat>::one(c.clone()),
            MultiPoly::var(c, 0).scale(&rat(2)),
        )
        .unwrap();
        assert!(rs[0].equal(&expect).unwrap());
        // S = d1/2 at x1 = 1
        let s = scalar_curvature(&d).unwrap();
        assert_eq!(eval_ratio(&s, &[rat(1)]).unwrap(), rat_frac(5, 2));
    }

    #[test]
    fn kahler_einstein_point_is_einstein() {
        for (d1, d2) in [(2, 4), (6, 1), (3, 3)] {
            let d = flag_q2(d1, d2);
            assert!(d.validate(&[]).is_empty());
            let rs = ricci_components(&d).unwrap();
            let p = [rat(1), rat(2)];
            assert_eq!(
                eval_ratio(&rs[0], &p).unwrap(),
                eval_ratio(&rs[1], &p).unwrap()
            );
        }
    }

    #[test]
    fn solved_bracket_matches_closed_form() {
        assert_eq!(
            bracket_from_kahler_einstein(&rat(2), &rat(4)).unwrap(),
            rat_frac(4, 9)
        );
        // symbolic in one slot: d1 = n, d2 = 3 gives 3n/(n+12)
        let n = RatFunc::n();
        let got = bracket_from_kahler_einstein(&n, &RatFunc::from_rat(rat(3))).unwrap();
        let expect = RatFunc::new(
            ParamPoly::new(vec![rat(0), rat(3)]),
            ParamPoly::new(vec![rat(12), rat(1)]),
        );
        assert_eq!(got, expect);
        // d1 = 2, d2 = n gives 2n/(4n+2) = n/(2n+1)
        let got2 = bracket_from_kahler_einstein(&RatFunc::from_rat(rat(2)), &n).unwrap();
        let expect2 = RatFunc::new(
            ParamPoly::new(vec![rat(0), rat(1)]),
            ParamPoly::new(vec![rat(1), rat(2)]),
        );
        assert_eq!(got2, expect2);
    }

    #[test]
    fn scale_covariance() {
        let d = flag_q2(2, 4);
        let rs = ricci_components(&d).unwrap();
        let p = [rat_frac(3, 2), rat_frac(7, 5)];
        let c = rat_frac(5, 3);
        let scaled = [&p[0] * &c, &p[1] * &c];
        for r in &rs {
            let at = eval_ratio(r, &p).unwrap();
            let at_scaled = eval_ratio(r, &scaled).unwrap();
            assert_eq!(at_scaled, at / &c);
        }
    }

    #[test]
    fn trace_identity() {
        let d = flag_q2(2, 4);
        let lhs = scalar_curvature(&d).unwrap();
        let rhs = scalar_curvature_traced(&d).unwrap();
        assert!(lhs.equal(&rhs).unwrap());
        let oracle = so_structure_constants(&[2, 3, 2], &[2]).unwrap();
        let lhs = scalar_curvature(&oracle).unwrap();
        let rhs = scalar_curvature_traced(&oracle).unwrap();
        assert!(lhs.equal(&rhs).unwrap());
    }

    #[test]
    fn flag_einstein_system_roots() {
        // normalize x1 = 1: solutions x2 = 2 and x2 = 4 d2/(d1 + 2 d2)
        let (d1, d2) = (2i64, 4i64);
        let d = flag_q2(d1, d2);
        let sys = einstein_system(&d, &[(0, 1)], &[("x1", rat(1))], "flag-q2").unwrap();
        assert_eq!(sys.equations.len(), 1);
        let eq = &sys.equations[0];
        for root in [rat(2), rat(4 * d2) / rat(d1 + 2 * d2)] {
            assert!(eq.evaluate_named(&[("x2", root)]).unwrap() == rat(0));
        }
        // disconnected pairing is rejected
        assert!(matches!(
            einstein_system(&d, &[(0, 0)], &[], "bad"),
            Err(Error::BadCase(_))
        ));
    }

    #[test]
    fn oracle_wallach_so6() {
        let d = so_structure_constants(&[2, 2, 2], &[0, 1, 2]).unwrap();
        assert_eq!(d.q(), 3);
        for k in 0..3 {
            assert_eq!(d.dim(k), &rat(4));
        }
        // [m23|m12, m13] = 2*2*2 / (2*(6-2)) = 1
        assert_eq!(d.triple(2, 0, 1), rat(1));
        assert!(d.validate(&[]).is_empty());
    }

    #[test]
    fn oracle_stiefel_232() {
        // SO(7)/SO(2): blocks (2,3,2), isotropy = last block
        let d = so_structure_constants(&[2, 3, 2], &[2]).unwrap();
        let labels: Vec<&str> = d.summands.iter().map(|s| s.label.as_str()).collect();
        assert_eq!(labels, vec!["so(k1)", "so(k2)", "m12", "m13", "m23"]);
        let dims: Vec<Rat> = (0..5).map(|k| d.dim(k).clone()).collect();
        assert_eq!(dims, vec![rat(1), rat(3), rat(6), rat(4), rat(6)]);
        // closed forms at (k1,k2,k3) = (2,3,2), n = 7:
        let expect = [
            ((1, 1, 1), "3/5"),  // [2|22] = d2(k2-2)/(n-2)
            ((2, 0, 2), "3/5"),  // [12|1,12] = k1k2(k1-1)/(2(n-2))
            ((3, 0, 3), "2/5"),  // [13|1,13] = k1k3(k1-1)/(2(n-2))
            ((2, 1, 2), "6/5"),  // [12|2,12] = k1k2(k2-1)/(2(n-2))
            ((4, 1, 4), "6/5"),  // [23|2,23] = k2k3(k2-1)/(2(n-2))
            ((4, 2, 3), "6/5"),  // [23|12,13] = k1k2k3/(2(n-2))
        ];
        for ((k, i, j), v) in expect {
            assert_eq!(d.triple(k, i, j), rat_parse(v).unwrap(), "triple [{k}|{i}{j}]");
        }
        // [1|11] vanishes for k1 = 2, and no unexpected orbits appear
        assert_eq!(d.triple(0, 0, 0), rat(0));
        assert_eq!(d.triple_orbits().count(), 6);
        assert!(d.validate(&[]).is_empty());
    }

    #[test]
    fn oracle_omits_so1() {
        // blocks (1, 4, 2), isotropy = last: so(1) contributes nothing
        let d = so_structure_constants(&[1, 4, 2], &[2]).unwrap();
        let labels: Vec<&str> = d.summands.iter().map(|s| s.label.as_str()).collect();
        assert_eq!(labels, vec!["so(k2)", "m12", "m13", "m23"]);
        assert_eq!(
            (0..4).map(|k| d.dim(k).clone()).collect::<Vec<_>>(),
            vec![rat(6), rat(4), rat(2), rat(8)]
        );
    }

    #[test]
    fn conflicting_triple_reported() {
        let mut d = flag_q2(2, 4);
        d.set_triple(0, 0, 1, rat(99));
        assert!(d.validate(&[]).iter().any(|v| v.contains("conflicting")));
    }

    #[test]
    fn einstein_faithfulness_at_random_points() {
        let d = so_structure_constants(&[2, 3, 2], &[2]).unwrap();
        let rs = ricci_components(&d).unwrap();
        let sys = einstein_system(
            &d,
            &[(0, 1), (1, 2), (2, 3), (3, 4)],
            &[],
            "faithfulness",
        )
        .unwrap();
        let points = [
            [rat(1), rat(1), rat(1), rat(1), rat(1)],
            [rat_frac(2, 3), rat(1), rat_frac(5, 4), rat(2), rat_frac(1, 2)],
        ];
        for p in &points {
            let ricci_equal = (1..5).all(|k| {
                eval_ratio(&rs[k], p).unwrap() == eval_ratio(&rs[0], p).unwrap()
            });
            let eqs_vanish = sys
                .equations
                .iter()
                .all(|e| e.evaluate(p).unwrap() == rat(0));
            assert_eq!(ricci_equal, eqs_vanish);
        }
    }

    #[test]
    fn parametric_stiefel_matches_oracle() {
        for (k1, k2) in [(2u32, 3u32), (1, 4), (2, 2), (1, 3), (3, 3)] {
            let par = stiefel_decomposition(k1, k2).unwrap();
            for k3 in 2..=4u32 {
                let n = rat((k1 + k2 + k3) as i64);
                let spec = specialize_decomposition(&par, &n).unwrap();
                let oracle =
                    so_structure_constants(&[k1 as usize, k2 as usize, k3 as usize], &[2])
                        .unwrap();
                assert_eq!(spec.summands.len(), oracle.summands.len());
                for (a, b) in spec.summands.iter().zip(&oracle.summands) {
                    assert_eq!((a.label.as_str(), a.var.as_str()), (b.label.as_str(), b.var.as_str()));
                    assert_eq!(a.dim, b.dim, "dim of {} at n={n}", a.label);
                }
                let got: BTreeMap<[usize; 3], Rat> = spec
                    .triple_orbits()
                    .map(|(k, v)| (*k, v.clone()))
                    .collect();
                let want: BTreeMap<[usize; 3], Rat> = oracle
                    .triple_orbits()
                    .map(|(k, v)| (*k, v.clone()))
                    .collect();
                assert_eq!(got, want, "triples for ({k1},{k2},{k3})");
            }
        }
    }
}
