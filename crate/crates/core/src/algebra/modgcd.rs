//! Dense modular gcd over ℤ by evaluation and interpolation.
//!
//! Images modulo word-sized primes are computed recursively: the last name
//! is specialised at points of ℤ/p, images are combined by Newton
//! interpolation, and images for several primes by Chinese remaindering.
//! Unlucky primes and points give images of too high degree and are
//! discarded; every candidate is certified by trial division.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::monomial::Monomial;
use super::poly::Polynomial;

type Exps = Vec<u32>;

fn mul(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn add(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

fn sub(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

fn pow(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul(r, a, p);
        }
        a = mul(a, a, p);
        e >>= 1;
    }
    r
}

fn inv(a: u64, p: u64) -> u64 {
    debug_assert!(a != 0);
    pow(a, p - 2, p)
}

/// Deterministic Miller-Rabin for 64-bit integers.
fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for b in BASES {
        if n.is_multiple_of(b) {
            return n == b;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for b in BASES {
        let mut x = pow(b, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Primes below 2^62, in decreasing order.
fn primes() -> impl Iterator<Item = u64> {
    let mut n = 1u64 << 62;
    std::iter::from_fn(move || loop {
        n -= 1;
        if is_prime(n) {
            return Some(n);
        }
    })
}

fn reduce(c: &BigInt, p: u64) -> u64 {
    c.mod_floor(&BigInt::from(p))
        .to_u64()
        .expect("residue fits")
}

// dense univariate polynomials over ℤ/p, lowest degree first, no trailing zeros

fn u_trim(mut a: Vec<u64>) -> Vec<u64> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn u_eval(a: &[u64], t: u64, p: u64) -> u64 {
    a.iter().rev().fold(0, |acc, &c| add(mul(acc, t, p), c, p))
}

fn u_scale(a: &[u64], c: u64, p: u64) -> Vec<u64> {
    u_trim(a.iter().map(|&x| mul(x, c, p)).collect())
}

fn u_divrem(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    let db = b.len() - 1;
    let lb = inv(b[db], p);
    let mut r = a.to_vec();
    if r.len() <= db {
        return (Vec::new(), r);
    }
    let mut q = vec![0; r.len() - db];
    for i in (0..q.len()).rev() {
        let c = mul(r[i + db], lb, p);
        q[i] = c;
        if c != 0 {
            for (j, &bj) in b.iter().enumerate() {
                r[i + j] = sub(r[i + j], mul(c, bj, p), p);
            }
        }
    }
    r.truncate(db);
    (u_trim(q), u_trim(r))
}

/// Monic gcd; `gcd(0, 0) = 0`.
fn u_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let (mut a, mut b) = (a.to_vec(), b.to_vec());
    while !b.is_empty() {
        let r = u_divrem(&a, &b, p).1;
        a = b;
        b = r;
    }
    match a.last() {
        Some(&l) => u_scale(&a, inv(l, p), p),
        None => a,
    }
}

/// `a · (x - t)`.
fn u_mul_linear(a: &[u64], t: u64, p: u64) -> Vec<u64> {
    let mut out = vec![0; a.len() + 1];
    for (i, &c) in a.iter().enumerate() {
        out[i + 1] = add(out[i + 1], c, p);
        out[i] = sub(out[i], mul(c, t, p), p);
    }
    u_trim(out)
}

/// Sparse polynomial over ℤ/p in descending lex order of exponent vectors.
#[derive(Clone, Debug, PartialEq)]
struct Mp {
    terms: Vec<(Exps, u64)>,
}

type Groups = BTreeMap<Exps, Vec<u64>>;

impl Mp {
    fn from_map(map: BTreeMap<Exps, u64>) -> Mp {
        Mp {
            terms: map.into_iter().rev().filter(|(_, c)| *c != 0).collect(),
        }
    }

    fn lead(&self) -> &Exps {
        &self.terms[0].0
    }

    fn is_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.iter().all(|&e| e == 0)
    }

    fn monic(mut self, p: u64) -> Mp {
        let l = inv(self.terms[0].1, p);
        for t in &mut self.terms {
            t.1 = mul(t.1, l, p);
        }
        self
    }

    /// Specialises name `k` to `t`.
    fn eval_at(&self, k: usize, t: u64, p: u64) -> Mp {
        let deg = self.terms.iter().map(|(e, _)| e[k]).max().unwrap_or(0) as usize;
        let mut powers = vec![1 % p; deg + 1];
        for i in 1..=deg {
            powers[i] = mul(powers[i - 1], t, p);
        }
        let mut map = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut key = e.clone();
            key[k] = 0;
            let slot = map.entry(key).or_insert(0);
            *slot = add(*slot, mul(*c, powers[e[k] as usize], p), p);
        }
        Mp::from_map(map)
    }

    /// Coefficients as dense polynomials in name `k`, keyed by the
    /// remaining exponents.
    fn groups(&self, k: usize) -> Groups {
        let mut out: Groups = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut key = e.clone();
            key[k] = 0;
            let slot = out.entry(key).or_default();
            let d = e[k] as usize;
            if slot.len() <= d {
                slot.resize(d + 1, 0);
            }
            slot[d] = *c;
        }
        out
    }

    fn from_groups(groups: &Groups, k: usize) -> Mp {
        let mut map = BTreeMap::new();
        for (key, u) in groups {
            for (d, &c) in u.iter().enumerate() {
                if c != 0 {
                    let mut e = key.clone();
                    e[k] = d as u32;
                    map.insert(e, c);
                }
            }
        }
        Mp::from_map(map)
    }

    /// Whether `h` divides `self` exactly.
    fn divisible_by(&self, h: &Mp, p: u64) -> bool {
        let mut r: BTreeMap<Exps, u64> = self.terms.iter().cloned().collect();
        let (hl, hc) = &h.terms[0];
        let hinv = inv(*hc, p);
        while let Some((lead, c)) = r.last_key_value() {
            let Some(shift) = lead
                .iter()
                .zip(hl)
                .map(|(a, b)| a.checked_sub(*b))
                .collect::<Option<Exps>>()
            else {
                return false;
            };
            let q = mul(*c, hinv, p);
            for (e, hcoef) in &h.terms {
                let key: Exps = e.iter().zip(&shift).map(|(a, b)| a + b).collect();
                let slot = r.entry(key.clone()).or_insert(0);
                *slot = sub(*slot, mul(q, *hcoef, p), p);
                if *slot == 0 {
                    r.remove(&key);
                }
            }
        }
        true
    }

    /// Product with a polynomial in name `k` alone.
    fn mul_uni(&self, u: &[u64], k: usize, p: u64) -> Mp {
        let mut map = BTreeMap::new();
        for (e, c) in &self.terms {
            for (d, &uc) in u.iter().enumerate() {
                if uc != 0 {
                    let mut key = e.clone();
                    key[k] += d as u32;
                    let slot = map.entry(key).or_insert(0);
                    *slot = add(*slot, mul(*c, uc, p), p);
                }
            }
        }
        Mp::from_map(map)
    }
}

fn groups_content(g: &Groups, p: u64) -> Vec<u64> {
    let mut c = Vec::new();
    for u in g.values() {
        c = u_gcd(&c, u, p);
        if c.len() == 1 {
            break;
        }
    }
    c
}

fn groups_div(g: &Groups, c: &[u64], p: u64) -> Groups {
    g.iter()
        .map(|(k, u)| (k.clone(), u_divrem(u, c, p).0))
        .collect()
}

/// Newton step: makes `h` agree with `image` at `t`, keeping its values at
/// the earlier points (the roots of `q`). Returns whether `h` changed.
fn interpolate(h: &mut Groups, q: &[u64], t: u64, image: &Mp, scale: u64, p: u64) -> bool {
    let qt_inv = inv(u_eval(q, t, p), p);
    let mut keys: Vec<Exps> = h.keys().cloned().collect();
    keys.extend(image.terms.iter().map(|(e, _)| e.clone()));
    keys.sort();
    keys.dedup();
    let values: BTreeMap<&Exps, u64> = image
        .terms
        .iter()
        .map(|(e, c)| (e, mul(*c, scale, p)))
        .collect();
    let mut changed = false;
    for key in keys {
        let want = values.get(&key).copied().unwrap_or(0);
        let slot = h.entry(key.clone()).or_default();
        let delta = sub(want, u_eval(slot, t, p), p);
        if delta != 0 {
            changed = true;
            let f = mul(delta, qt_inv, p);
            if slot.len() < q.len() {
                slot.resize(q.len(), 0);
            }
            for (i, &qc) in q.iter().enumerate() {
                slot[i] = add(slot[i], mul(f, qc, p), p);
            }
            *slot = u_trim(std::mem::take(slot));
        }
        if slot.is_empty() {
            h.remove(&key);
        }
    }
    changed
}

/// Monic gcd modulo `p` of nonzero `a`, `b` involving names `0..=k` only.
fn gcd_mod_p(a: &Mp, b: &Mp, k: usize, p: u64) -> Mp {
    let width = a.terms[0].0.len();
    if k == 0 {
        let ua = a.groups(0).into_values().next().expect("nonzero");
        let ub = b.groups(0).into_values().next().expect("nonzero");
        let g = u_gcd(&ua, &ub, p);
        let mut groups = BTreeMap::new();
        groups.insert(vec![0; width], g);
        return Mp::from_groups(&groups, 0);
    }
    let ga = a.groups(k);
    let gb = b.groups(k);
    let ca = groups_content(&ga, p);
    let cb = groups_content(&gb, p);
    let c = u_gcd(&ca, &cb, p);
    let ga = groups_div(&ga, &ca, p);
    let gb = groups_div(&gb, &cb, p);
    let lc = u_gcd(
        ga.values().next_back().expect("nonzero"),
        gb.values().next_back().expect("nonzero"),
        p,
    );
    let deg = |g: &Groups| g.values().map(|u| u.len() - 1).max().unwrap_or(0);
    let limit = lc.len() - 1 + deg(&ga).max(deg(&gb));
    let a1 = Mp::from_groups(&ga, k);
    let b1 = Mp::from_groups(&gb, k);

    let constant_gcd = || {
        let mut g = BTreeMap::new();
        g.insert(vec![0; width], c.clone());
        Mp::from_groups(&g, k).monic(p)
    };
    let mut h: Groups = BTreeMap::new();
    let mut q = vec![1u64];
    let mut points = 0usize;
    let mut lead: Option<Exps> = None;
    for t in 0..p {
        let scale = u_eval(&lc, t, p);
        if scale == 0 {
            continue;
        }
        let image = gcd_mod_p(&a1.eval_at(k, t, p), &b1.eval_at(k, t, p), k - 1, p);
        if image.is_constant() {
            return constant_gcd();
        }
        match &lead {
            Some(l) if image.lead() > l => continue,
            Some(l) if image.lead() == l => {}
            _ => {
                lead = Some(image.lead().clone());
                h.clear();
                q = vec![1];
                points = 0;
            }
        }
        let changed = interpolate(&mut h, &q, t, &image, scale, p);
        q = u_mul_linear(&q, t, p);
        points += 1;
        if (!changed && points > 1) || points > limit {
            let cont = groups_content(&h, p);
            let cand = Mp::from_groups(&groups_div(&h, &cont, p), k);
            if a1.divisible_by(&cand, p) && b1.divisible_by(&cand, p) {
                return cand.mul_uni(&c, k, p).monic(p);
            }
            if points > limit {
                lead = None;
            }
        }
    }
    unreachable!("field exhausted before the gcd was found")
}

/// Gcd of nonzero polynomials including the integer content, with positive
/// leading coefficient.
pub(crate) fn modular_gcd(a: &Polynomial, b: &Polynomial) -> Polynomial {
    let ctx = a.ctx();
    let sa = a.support();
    let sb = b.support();
    let mut names: Vec<usize> = (0..sa.len()).filter(|&v| sa[v] || sb[v]).collect();
    let content = a.content().gcd(&b.content());
    if names.is_empty() {
        return Polynomial::constant(ctx, content);
    }
    // the first name is never specialised, so it should carry the most degree
    names.sort_by_key(|&v| (std::cmp::Reverse(a.degree_in(v).max(b.degree_in(v))), v));
    let a = a.primitive_part();
    let b = b.primitive_part();
    let dense = |p: &Polynomial| -> Vec<(Exps, BigInt)> {
        let mut t: Vec<(Exps, BigInt)> = p
            .terms()
            .iter()
            .map(|(m, c)| (names.iter().map(|&v| m.exp(v)).collect(), c.clone()))
            .collect();
        t.sort_by(|x, y| y.0.cmp(&x.0));
        t
    };
    let (da, db) = (dense(&a), dense(&b));
    let gamma = da[0].1.gcd(&db[0].1);
    let k = names.len() - 1;
    let modp = |d: &[(Exps, BigInt)], p: u64| {
        Mp::from_map(d.iter().map(|(e, c)| (e.clone(), reduce(c, p))).collect())
    };

    let mut residues: BTreeMap<Exps, BigInt> = BTreeMap::new();
    let mut modulus = BigInt::one();
    let mut lead: Option<Exps> = None;
    let mut previous: Option<Vec<(Exps, BigInt)>> = None;
    for p in primes() {
        let gp = reduce(&gamma, p);
        if gp == 0 {
            continue;
        }
        let image = gcd_mod_p(&modp(&da, p), &modp(&db, p), k, p);
        if image.is_constant() {
            return Polynomial::constant(ctx, content);
        }
        match &lead {
            Some(l) if image.lead() > l => continue,
            Some(l) if image.lead() == l => {}
            _ => {
                lead = Some(image.lead().clone());
                residues.clear();
                modulus = BigInt::one();
                previous = None;
            }
        }
        let pb = BigInt::from(p);
        let m_inv = BigInt::from(inv(reduce(&modulus, p), p));
        let values: BTreeMap<&Exps, u64> = image
            .terms
            .iter()
            .map(|(e, c)| (e, mul(*c, gp, p)))
            .collect();
        let mut keys: Vec<Exps> = residues.keys().cloned().collect();
        keys.extend(values.keys().map(|e| (*e).clone()));
        keys.sort();
        keys.dedup();
        for key in keys {
            let want = BigInt::from(values.get(&key).copied().unwrap_or(0));
            let r = residues.entry(key).or_insert_with(BigInt::zero);
            let delta = ((&want - &*r) * &m_inv).mod_floor(&pb);
            *r += &modulus * delta;
        }
        modulus *= &pb;
        let half = &modulus >> 1u32;
        let balanced: Vec<(Exps, BigInt)> = residues
            .iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| (e.clone(), if *c > half { c - &modulus } else { c.clone() }))
            .collect();
        if previous.as_ref() == Some(&balanced) {
            let cand = Polynomial::from_terms(
                ctx,
                balanced.iter().map(|(e, c)| {
                    let mut m = vec![0u32; ctx.len()];
                    for (i, &v) in names.iter().enumerate() {
                        m[v] = e[i];
                    }
                    (Monomial::from_exponents(&m), c.clone())
                }),
            )
            .primitive_part();
            if a.exact_div(&cand).is_some() && b.exact_div(&cand).is_some() {
                return cand.scale(&content).normalized_sign();
            }
        }
        previous = Some(balanced);
    }
    unreachable!("prime supply exhausted")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes_and_univariate_gcd() {
        assert!(is_prime((1u64 << 61) - 1));
        assert!(!is_prime((1u64 << 61) + 1));
        let p = primes().next().unwrap();
        assert_eq!(p, (1u64 << 62) - 57);
        // (x+1)(x+2) and (x+1)(x+3)
        let g = u_gcd(&[2, 3, 1], &[3, 4, 1], p);
        assert_eq!(g, vec![1, 1]);
    }
}
