//! Hyperplane arrangements with exact coefficients: the braid, Linial,
//! homogenized Linial, type B and Dowling families, their intersection
//! posets, and point counts over prime fields.
//!
//! Coefficients are written `c·w^l` where `w` is a primitive `m`-th root of
//! unity. Over the rationals only `m <= 2` is representable (`w = 1` or
//! `w = -1`); over `F_q` the root is the smallest element of order `m`.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use fixedbitset::FixedBitSet;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{rank, AffineFlat};
use crate::poly::{IntPolynomial, RatPolynomial};
use crate::poset::FinitePoset;
use crate::scalar::{is_prime, Field, Rational};

/// `scalar · w^power`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Coefficient {
    pub scalar: Rational,
    pub power: u32,
}

impl Coefficient {
    pub fn int(v: i64) -> Self {
        Coefficient { scalar: Rational::from_integer(v.into()), power: 0 }
    }

    pub fn root(scalar: i64, power: u32) -> Self {
        Coefficient { scalar: Rational::from_integer(scalar.into()), power }
    }

    pub fn is_zero(&self) -> bool {
        self.scalar.is_zero()
    }
}

impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.power == 0 || self.scalar.is_zero() {
            return write!(f, "{}", self.scalar);
        }
        if self.scalar.is_one() {
            write!(f, "w^{}", self.power)
        } else if (-self.scalar.clone()).is_one() {
            write!(f, "-w^{}", self.power)
        } else {
            write!(f, "{}*w^{}", self.scalar, self.power)
        }
    }
}

impl FromStr for Coefficient {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad coefficient {s:?}"));
        let parse_rat = |t: &str| -> Result<Rational> {
            match t.split_once('/') {
                Some((p, q)) => {
                    let p: BigInt = p.parse().map_err(|_| bad())?;
                    let q: BigInt = q.parse().map_err(|_| bad())?;
                    if q.is_zero() {
                        return Err(bad());
                    }
                    Ok(Rational::new(p, q))
                }
                None => Ok(Rational::from_integer(t.parse().map_err(|_| bad())?)),
            }
        };
        match s.split_once('w') {
            None => Ok(Coefficient { scalar: parse_rat(s)?, power: 0 }),
            Some((pre, post)) => {
                let pre = pre.strip_suffix('*').unwrap_or(pre);
                let scalar = match pre {
                    "" | "+" => Rational::one(),
                    "-" => -Rational::one(),
                    p => parse_rat(p)?,
                };
                let power = match post {
                    "" => 1,
                    p => p.strip_prefix('^').ok_or_else(bad)?.parse().map_err(|_| bad())?,
                };
                Ok(Coefficient { scalar, power })
            }
        }
    }
}

/// The hyperplane `coeffs · x = constant`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Hyperplane {
    pub coeffs: Vec<Coefficient>,
    pub constant: Coefficient,
}

impl fmt::Display for Hyperplane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lhs: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "{} | {}", lhs.join(" "), self.constant)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ArrangementFamily {
    Braid,
    Linial,
    HomogenizedLinial,
    TypeB,
    Dowling,
}

impl FromStr for ArrangementFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace('-', "_").as_str() {
            "braid" => Ok(ArrangementFamily::Braid),
            "linial" => Ok(ArrangementFamily::Linial),
            "homogenized_linial" | "typea" => Ok(ArrangementFamily::HomogenizedLinial),
            "typeb" | "typeb_homogenized" | "type_b" => Ok(ArrangementFamily::TypeB),
            "dowling" | "dowling_homogenized" => Ok(ArrangementFamily::Dowling),
            _ => Err(Error::Parameter(format!("unknown arrangement family {s:?}"))),
        }
    }
}

/// A finite list of hyperplanes in a `dim`-dimensional space; `modulus` is
/// the order of `w` in any `w^l` coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrangement {
    dim: usize,
    modulus: u32,
    hyperplanes: Vec<Hyperplane>,
}

impl Arrangement {
    pub fn new(dim: usize, modulus: u32, hyperplanes: Vec<Hyperplane>) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::Parameter("modulus must be at least 1".into()));
        }
        for h in &hyperplanes {
            if h.coeffs.len() != dim {
                return Err(Error::Parameter(format!("hyperplane {h} does not live in dimension {dim}")));
            }
            if h.coeffs.iter().all(Coefficient::is_zero) {
                return Err(Error::Parameter(format!("hyperplane {h} has zero linear part")));
            }
        }
        Ok(Arrangement { dim, modulus, hyperplanes })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn hyperplanes(&self) -> &[Hyperplane] {
        &self.hyperplanes
    }

    pub fn len(&self) -> usize {
        self.hyperplanes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hyperplanes.is_empty()
    }

    /// One hyperplane per line, `c1 ... cd | c0`.
    pub fn to_text(&self) -> String {
        self.hyperplanes.iter().map(|h| format!("{h}\n")).collect()
    }

    /// Parses [`Arrangement::to_text`] output; blank lines and `#` comments are skipped.
    pub fn parse(text: &str, modulus: u32) -> Result<Self> {
        let mut hyperplanes = Vec::new();
        let mut dim = None;
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (lhs, rhs) = line
                .split_once('|')
                .ok_or_else(|| Error::Parse(format!("missing '|' in {line:?}")))?;
            let coeffs = lhs.split_whitespace().map(str::parse).collect::<Result<Vec<Coefficient>>>()?;
            let constant = rhs.trim().parse()?;
            if *dim.get_or_insert(coeffs.len()) != coeffs.len() {
                return Err(Error::Parse(format!("inconsistent dimension in {line:?}")));
            }
            hyperplanes.push(Hyperplane { coeffs, constant });
        }
        Arrangement::new(dim.unwrap_or(0), modulus, hyperplanes)
    }

    /// Rows `[a_1 .. a_d | c]` over the rationals; `w` is `1` for `m = 1`
    /// and `-1` for `m = 2`.
    pub fn rational_equations(&self) -> Result<Vec<Vec<Rational>>> {
        let resolve = |c: &Coefficient| -> Result<Rational> {
            let l = c.power % self.modulus;
            match (self.modulus, l) {
                (_, 0) => Ok(c.scalar.clone()),
                (2, 1) => Ok(-c.scalar.clone()),
                _ if c.scalar.is_zero() => Ok(Rational::zero()),
                (m, _) => Err(Error::Unsupported(format!(
                    "w of order {m} has no rational value; use a prime field"
                ))),
            }
        };
        self.hyperplanes
            .iter()
            .map(|h| {
                let mut row = h.coeffs.iter().map(resolve).collect::<Result<Vec<_>>>()?;
                row.push(resolve(&h.constant)?);
                Ok(row)
            })
            .collect()
    }

    /// Reduction modulo the prime `q`, with `w` sent to the smallest element of order `m`.
    pub fn reduce_mod(&self, q: u64) -> Result<ModArrangement> {
        if !is_prime(q) {
            return Err(Error::Parameter(format!("{q} is not prime")));
        }
        if q >= 1 << 31 {
            return Err(Error::Parameter(format!("{q} is too large for point counting")));
        }
        let m = self.modulus as u64;
        if (q - 1) % m != 0 {
            return Err(Error::Parameter(format!("F_{q} has no element of order {m}: need q = 1 mod {m}")));
        }
        let zeta = root_of_unity(q, m);
        let resolve = |c: &Coefficient| -> Result<u64> {
            let num = c.scalar.numer().mod_floor(&BigInt::from(q)).to_u64().expect("reduced");
            let den = c.scalar.denom().mod_floor(&BigInt::from(q)).to_u64().expect("reduced");
            if den == 0 {
                return Err(Error::Domain(format!("denominator of {} vanishes mod {q}", c.scalar)));
            }
            let w = pow_mod(zeta, (c.power as u64) % m, q);
            Ok(num * inv_mod(den, q) % q * w % q)
        };
        let rows = self
            .hyperplanes
            .iter()
            .map(|h| {
                let mut row = h.coeffs.iter().map(resolve).collect::<Result<Vec<_>>>()?;
                row.push(resolve(&h.constant)?);
                Ok(row)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ModArrangement { q, zeta, dim: self.dim, rows })
    }
}

/// Hyperplanes of a family. Coordinates are `x_1..x_k` followed by
/// `y_1..y_k` for the homogenized families.
pub fn make_arrangement(family: ArrangementFamily, n: u32, m: u32) -> Result<Arrangement> {
    if n == 0 {
        return Err(Error::Parameter("n must be at least 1".into()));
    }
    let n = n as usize;
    let row = |dim: usize, terms: &[(usize, Coefficient)], c: i64| {
        let mut coeffs = vec![Coefficient::int(0); dim];
        for (k, v) in terms {
            coeffs[*k] = v.clone();
        }
        Hyperplane { coeffs, constant: Coefficient::int(c) }
    };
    let one = Coefficient::int(1);
    let minus = Coefficient::int(-1);
    match family {
        ArrangementFamily::Braid | ArrangementFamily::Linial => {
            let c = if family == ArrangementFamily::Braid { 0 } else { 1 };
            let hs = pairs(n)
                .map(|(i, j)| row(n, &[(i, one.clone()), (j, minus.clone())], c))
                .collect();
            Arrangement::new(n, 1, hs)
        }
        ArrangementFamily::HomogenizedLinial => {
            let k = n + 1;
            let hs = pairs(k)
                .map(|(i, j)| row(2 * k, &[(i, one.clone()), (j, minus.clone()), (k + i, minus.clone())], 0))
                .collect();
            Arrangement::new(2 * k, 1, hs)
        }
        ArrangementFamily::TypeB => dowling_rows(n, 2, &row).and_then(|hs| Arrangement::new(2 * n, 2, hs)),
        ArrangementFamily::Dowling => {
            if m == 0 {
                return Err(Error::Parameter("m must be at least 1".into()));
            }
            dowling_rows(n, m, &row).and_then(|hs| Arrangement::new(2 * n, m, hs))
        }
    }
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |i| (i + 1..n).map(move |j| (i, j)))
}

fn dowling_rows(
    n: usize,
    m: u32,
    row: &dyn Fn(usize, &[(usize, Coefficient)], i64) -> Hyperplane,
) -> Result<Vec<Hyperplane>> {
    let d = 2 * n;
    let mut hs = Vec::new();
    for (i, j) in pairs(n) {
        for l in 0..m {
            hs.push(row(d, &[(i, Coefficient::int(1)), (j, Coefficient::root(-1, l)), (n + i, Coefficient::int(-1))], 0));
        }
    }
    for i in 0..n {
        hs.push(row(d, &[(i, Coefficient::int(1)), (n + i, Coefficient::int(-1))], 0));
    }
    Ok(hs)
}

/// All nonempty intersections of the hyperplanes `eqs` (rows `[a | c]` in
/// `F^dim`), ordered by reverse inclusion. The ambient space is the bottom.
pub fn intersection_poset<F: Field + Send + Sync>(dim: usize, eqs: &[Vec<F>]) -> Result<FinitePoset<AffineFlat<F>>> {
    let containing = |x: &AffineFlat<F>| {
        let mut s = FixedBitSet::with_capacity(eqs.len());
        for (h, e) in eqs.iter().enumerate() {
            if x.lies_in(e) {
                s.insert(h);
            }
        }
        s
    };
    let ambient = AffineFlat::ambient(dim);
    let mut index: HashMap<AffineFlat<F>, usize> = HashMap::new();
    let mut flats = vec![ambient.clone()];
    let mut masks = vec![containing(&ambient)];
    index.insert(ambient, 0);
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for (h, e) in eqs.iter().enumerate() {
            if masks[i].contains(h) {
                continue;
            }
            let Some(y) = flats[i].meet(e) else { continue };
            if index.contains_key(&y) {
                continue;
            }
            index.insert(y.clone(), flats.len());
            masks.push(containing(&y));
            flats.push(y);
            queue.push_back(flats.len() - 1);
        }
    }
    FinitePoset::from_leq(flats, |a, b| masks[index[a]].is_subset(&masks[index[b]]))
}

/// The intersection poset of an arrangement with rational coefficients.
pub fn rational_intersection_poset(arr: &Arrangement) -> Result<FinitePoset<AffineFlat<Rational>>> {
    intersection_poset(arr.dim(), &arr.rational_equations()?)
}

/// An arrangement reduced modulo a prime `q`; `zeta` is the image of `w`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModArrangement {
    pub q: u64,
    pub zeta: u64,
    dim: usize,
    rows: Vec<Vec<u64>>,
}

fn pow_mod(mut b: u64, mut e: u64, q: u64) -> u64 {
    let mut r = 1 % q;
    b %= q;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % q;
        }
        b = b * b % q;
        e >>= 1;
    }
    r
}

fn inv_mod(a: u64, q: u64) -> u64 {
    pow_mod(a, q - 2, q)
}

/// Smallest element of multiplicative order exactly `m` in `F_q`.
pub fn root_of_unity(q: u64, m: u64) -> u64 {
    let mut primes = Vec::new();
    let mut r = m;
    let mut p = 2;
    while p * p <= r {
        if r % p == 0 {
            primes.push(p);
            while r % p == 0 {
                r /= p;
            }
        }
        p += 1;
    }
    if r > 1 {
        primes.push(r);
    }
    (1..q)
        .find(|&g| pow_mod(g, m, q) == 1 && primes.iter().all(|&p| pow_mod(g, m / p, q) != 1))
        .expect("q = 1 mod m")
}

impl ModArrangement {
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Rank of the linear parts over `F_q`.
    pub fn rank(&self) -> usize {
        let rows: Vec<Vec<ModQ>> = self
            .rows
            .iter()
            .map(|r| r[..self.dim].iter().map(|&v| ModQ::new(v, self.q)).collect())
            .collect();
        rank_mod(rows, self.q)
    }

    /// Number of points of `F_q^d` on no hyperplane.
    ///
    /// Coordinates are split into a set `F` in which no hyperplane has two
    /// nonzero coefficients, and the rest `E`. Points of `F_q^E` are
    /// enumerated; each hyperplane then forbids at most one value of one
    /// free coordinate, so the free coordinates contribute a product.
    pub fn count_points(&self) -> BigInt {
        let q = self.q;
        let d = self.dim;
        let mut free = vec![false; d];
        for f in (0..d).rev() {
            let clash = self.rows.iter().any(|r| r[f] != 0 && (0..d).any(|g| free[g] && r[g] != 0));
            if !clash {
                free[f] = true;
            }
        }
        let enumerated: Vec<usize> = (0..d).filter(|&k| !free[k]).collect();
        let free_list: Vec<usize> = (0..d).filter(|&k| free[k]).collect();
        // per hyperplane: coefficients on enumerated coords, its free coord and inverse coefficient
        let hyps: Vec<(Vec<u64>, Option<(usize, u64)>, u64)> = self
            .rows
            .iter()
            .map(|r| {
                let e: Vec<u64> = enumerated.iter().map(|&k| r[k]).collect();
                let f = free_list
                    .iter()
                    .position(|&k| r[k] != 0)
                    .map(|pos| (pos, inv_mod(r[free_list[pos]], q)));
                (e, f, r[d])
            })
            .collect();
        let leaf = |sums: &[u64], forb: &mut Vec<Vec<u64>>| -> u128 {
            for f in forb.iter_mut() {
                f.clear();
            }
            for (h, (_, f, c)) in hyps.iter().enumerate() {
                let rhs = (c + q - sums[h]) % q;
                match f {
                    None => {
                        if rhs == 0 {
                            return 0;
                        }
                    }
                    Some((pos, inv)) => {
                        let v = rhs * inv % q;
                        if !forb[*pos].contains(&v) {
                            forb[*pos].push(v);
                        }
                    }
                }
            }
            forb.iter().map(|f| (q - f.len() as u64) as u128).product()
        };
        let walk = |first: Option<u64>| -> u128 {
            let mut forb = vec![Vec::new(); free_list.len()];
            let depth = enumerated.len();
            let mut sums = vec![vec![0u64; hyps.len()]; depth + 1];
            let mut digits = vec![0u64; depth];
            let start = if first.is_some() { 1 } else { 0 };
            if let Some(v) = first {
                digits[0] = v;
                for (h, (e, _, _)) in hyps.iter().enumerate() {
                    sums[1][h] = e[0] * v % q;
                }
            }
            // odometer over digits[start..], sums[k + 1] covering digits[..=k]
            let mut total = 0u128;
            let mut k = start;
            loop {
                if k == depth {
                    total += leaf(&sums[depth], &mut forb);
                    // advance
                    loop {
                        if k == start {
                            return total;
                        }
                        k -= 1;
                        digits[k] += 1;
                        if digits[k] < q {
                            break;
                        }
                        digits[k] = 0;
                    }
                }
                let v = digits[k];
                let (lo, hi) = sums.split_at_mut(k + 1);
                for (h, (e, _, _)) in hyps.iter().enumerate() {
                    hi[0][h] = (lo[k][h] + e[k] * v) % q;
                }
                k += 1;
            }
        };
        let total: u128 = if enumerated.is_empty() {
            let mut forb = vec![Vec::new(); free_list.len()];
            leaf(&vec![0; hyps.len()], &mut forb)
        } else {
            (0..q).into_par_iter().map(|v| walk(Some(v))).sum()
        };
        BigInt::from(total)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
struct ModQ(u64);

impl ModQ {
    fn new(v: u64, q: u64) -> Self {
        ModQ(v % q)
    }
}

fn rank_mod(mut rows: Vec<Vec<ModQ>>, q: u64) -> usize {
    let width = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for col in 0..width {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][col].0 != 0) else {
            continue;
        };
        rows.swap(r, p);
        let inv = inv_mod(rows[r][col].0, q);
        for i in r + 1..rows.len() {
            let f = rows[i][col].0 * inv % q;
            if f != 0 {
                for j in col..width {
                    rows[i][j] = ModQ((rows[i][j].0 + q - f * rows[r][j].0 % q) % q);
                }
            }
        }
        r += 1;
    }
    r
}

/// Ascending primes `q > max(h^2, floor)` with `q = 1 mod m`.
pub fn good_primes(hyperplanes: usize, m: u32, floor: u64, count: usize) -> Vec<u64> {
    let lo = ((hyperplanes * hyperplanes) as u64).max(floor);
    (lo + 1..)
        .filter(|&q| (q - 1) % m as u64 == 0 && is_prime(q))
        .take(count)
        .collect()
}

/// Point count at `q` divided by `q^(d - r)`, the poset characteristic
/// polynomial evaluated at `q`. Fails if the division is not exact.
pub fn chi_value_at(arr: &Arrangement, q: u64, r: usize) -> Result<BigInt> {
    let red = arr.reduce_mod(q)?;
    let count = red.count_points();
    let scale = BigInt::from(q).pow((arr.dim() - r) as u32);
    let (quo, rem) = count.div_rem(&scale);
    if !rem.is_zero() {
        return Err(Error::Integrity(format!("{count} points over F_{q} is not divisible by {scale}")));
    }
    Ok(quo)
}

/// Result of interpolating the characteristic polynomial from point counts.
#[derive(Clone, Debug, Serialize)]
pub struct FiniteFieldChi {
    pub chi: IntPolynomial,
    pub rank: usize,
    /// `(q, q^(d-r) chi(q))` for every prime used.
    #[serde(serialize_with = "ser_points")]
    pub points: Vec<(u64, BigInt)>,
}

fn ser_points<S: serde::Serializer>(pts: &[(u64, BigInt)], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(pts.len()))?;
    for (q, c) in pts {
        seq.serialize_element(&(q.to_string(), c.to_string()))?;
    }
    seq.end()
}

/// Interpolates `chi` (degree `r`, the rank of the linear parts) from point
/// counts at `r + 1` good primes above `floor`.
pub fn chi_by_interpolation(arr: &Arrangement, floor: u64) -> Result<FiniteFieldChi> {
    let primes = good_primes(arr.len(), arr.modulus(), floor, 1);
    let r = arr.reduce_mod(primes[0])?.rank();
    let primes = good_primes(arr.len(), arr.modulus(), floor, r + 1);
    let mut points = Vec::with_capacity(primes.len());
    let mut values = Vec::with_capacity(primes.len());
    for &q in &primes {
        let v = chi_value_at(arr, q, r)?;
        points.push((q, v.clone() * BigInt::from(q).pow((arr.dim() - r) as u32)));
        values.push((BigInt::from(q), v));
    }
    let chi = interpolate(&values)?;
    if chi.degree() != Some(r) || !chi.leading().is_some_and(|c| c.is_one()) {
        return Err(Error::Integrity(format!("interpolated {} is not monic of degree {r}", chi.pretty("t"))));
    }
    Ok(FiniteFieldChi { chi, rank: r, points })
}

/// Lagrange interpolation through integer points, requiring an integer result.
pub fn interpolate(points: &[(BigInt, BigInt)]) -> Result<IntPolynomial> {
    let mut acc = RatPolynomial::zero();
    for (i, (xi, yi)) in points.iter().enumerate() {
        let mut term = RatPolynomial::constant(Rational::from_integer(yi.clone()));
        for (j, (xj, _)) in points.iter().enumerate() {
            if i != j {
                let den = Rational::from_integer(xi - xj);
                let lin = RatPolynomial::new(vec![Rational::from_integer(-xj.clone()) / den.clone(), Rational::one() / den]);
                term = term * lin;
            }
        }
        acc = acc + term;
    }
    if acc.coeffs().iter().any(|c| !c.is_integer()) {
        return Err(Error::Integrity("interpolated polynomial has fractional coefficients".into()));
    }
    Ok(IntPolynomial::new(acc.coeffs().iter().map(|c| c.to_integer()).collect()))
}

/// Rank of the linear parts over the rationals.
pub fn rational_rank(arr: &Arrangement) -> Result<usize> {
    let eqs = arr.rational_equations()?;
    let lin: Vec<Vec<Rational>> = eqs.iter().map(|r| r[..arr.dim()].to_vec()).collect();
    Ok(rank(&lin))
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::bond::gamma_subposet;
    use crate::partition::partitions_with_blocks;
    use crate::SetPartition;

    fn pi(n: u32) -> FinitePoset<SetPartition> {
        let ground: Vec<u32> = (1..=n).collect();
        FinitePoset::from_leq(partitions_with_blocks(&ground, |_| true), SetPartition::refines).unwrap()
    }

    /// Direct count over all of `F_q^d`.
    fn brute_count(arr: &ModArrangement) -> u64 {
        let q = arr.q;
        let d = arr.dim;
        let total = q.pow(d as u32);
        (0..total)
            .filter(|&idx| {
                let mut x = Vec::with_capacity(d);
                let mut v = idx;
                for _ in 0..d {
                    x.push(v % q);
                    v /= q;
                }
                arr.rows.iter().all(|r| (0..d).map(|k| r[k] * x[k] % q).sum::<u64>() % q != r[d])
            })
            .count() as u64
    }

    #[test]
    fn family_sizes() {
        let h = make_arrangement(ArrangementFamily::HomogenizedLinial, 2, 1).unwrap();
        assert_eq!((h.len(), h.dim()), (3, 6));
        let b = make_arrangement(ArrangementFamily::TypeB, 2, 1).unwrap();
        assert_eq!(
            b.to_text(),
            "1 -1 -1 0 | 0\n1 1 -1 0 | 0\n1 0 -1 0 | 0\n0 1 0 -1 | 0\n".replace("1 1 -1", "1 -w^1 -1")
        );
        let d2 = make_arrangement(ArrangementFamily::Dowling, 2, 2).unwrap();
        assert_eq!(d2.rational_equations().unwrap(), b.rational_equations().unwrap());
        assert!(make_arrangement(ArrangementFamily::Braid, 0, 1).is_err());
    }

    #[test]
    fn text_round_trip() {
        let d = make_arrangement(ArrangementFamily::Dowling, 3, 3).unwrap();
        assert_eq!(Arrangement::parse(&d.to_text(), 3).unwrap(), d);
        let a = Arrangement::parse("1/2 -3 | 2/3\n# comment\n\n-2w^2 0 | 1\n", 3).unwrap();
        assert_eq!(a.hyperplanes()[1].coeffs[0], Coefficient::root(-2, 2));
        assert!(Arrangement::parse("1 1 | 0\n1 | 0\n", 1).is_err());
        assert!(Arrangement::parse("0 0 | 1\n", 1).is_err());
        assert!(matches!(d.rational_equations(), Err(Error::Unsupported(_))));
    }

    #[test]
    fn braid_poset_is_partition_lattice() {
        for n in 2..=4 {
            let p = rational_intersection_poset(&make_arrangement(ArrangementFamily::Braid, n, 1).unwrap()).unwrap();
            assert_eq!(p.characteristic_polynomial(), pi(n).characteristic_polynomial());
            assert_eq!(p.rank_sizes(), pi(n).rank_sizes());
        }
    }

    #[test]
    fn single_hyperplane_is_a_chain() {
        let a = Arrangement::parse("1 2 | 3\n", 1).unwrap();
        let p = rational_intersection_poset(&a).unwrap();
        assert_eq!(p.len(), 2);
        assert_eq!(p.characteristic_polynomial(), IntPolynomial::from_i64s(&[-1, 1]));
    }

    #[test]
    fn linial_is_a_semilattice() {
        let p = rational_intersection_poset(&make_arrangement(ArrangementFamily::Linial, 3, 1).unwrap()).unwrap();
        assert!(p.top().is_none());
        // x1 - x2 = 1 and x2 - x3 = 1 force x1 - x3 = 2; three lines, three points
        assert_eq!(p.rank_sizes(), vec![1, 3, 3]);
        assert_eq!(p.characteristic_polynomial(), IntPolynomial::from_i64s(&[3, -3, 1]));
    }

    #[test]
    fn homogenized_linial_has_gamma_sizes() {
        for n in 1..=3 {
            let p = rational_intersection_poset(&make_arrangement(ArrangementFamily::HomogenizedLinial, n, 1).unwrap()).unwrap();
            let g = gamma_subposet(n);
            assert_eq!(p.rank_sizes(), g.rank_sizes());
            assert_eq!(p.characteristic_polynomial(), g.characteristic_polynomial());
        }
    }

    #[test]
    fn point_counts_match_brute_force() {
        for (fam, n, m, q) in [
            (ArrangementFamily::Braid, 3, 1, 5),
            (ArrangementFamily::Linial, 3, 1, 7),
            (ArrangementFamily::HomogenizedLinial, 1, 1, 5),
            (ArrangementFamily::TypeB, 2, 2, 5),
            (ArrangementFamily::Dowling, 2, 3, 7),
        ] {
            let red = make_arrangement(fam, n, m).unwrap().reduce_mod(q).unwrap();
            assert_eq!(red.count_points(), BigInt::from(brute_count(&red)), "{fam:?} {n} {m} {q}");
        }
        let mixed = Arrangement::parse("1 1 0 | 2\n0 1 1 | 0\n1 0 1 | 1\n2 0 0 | 1\n", 1).unwrap();
        let red = mixed.reduce_mod(5).unwrap();
        assert_eq!(red.count_points(), BigInt::from(brute_count(&red)));
    }

    #[test]
    fn point_count_examples() {
        let braid = make_arrangement(ArrangementFamily::Braid, 3, 1).unwrap();
        assert_eq!(braid.reduce_mod(5).unwrap().count_points(), BigInt::from(60));
        let hl = make_arrangement(ArrangementFamily::HomogenizedLinial, 2, 1).unwrap();
        assert_eq!(hl.reduce_mod(7).unwrap().count_points(), BigInt::from(74088));
    }

    #[test]
    fn prime_field_checks() {
        let d = make_arrangement(ArrangementFamily::Dowling, 2, 3).unwrap();
        assert!(matches!(d.reduce_mod(5), Err(Error::Parameter(_))));
        assert!(matches!(d.reduce_mod(9), Err(Error::Parameter(_))));
        assert_eq!(d.reduce_mod(7).unwrap().zeta, 2);
        assert_eq!(root_of_unity(13, 4), 5);
        assert_eq!(root_of_unity(7, 1), 1);
        assert_eq!(good_primes(3, 3, 0, 3), vec![13, 19, 31]);
    }

    #[test]
    fn interpolation_recovers_small_chis() {
        let hl = make_arrangement(ArrangementFamily::HomogenizedLinial, 2, 1).unwrap();
        let r = chi_by_interpolation(&hl, 0).unwrap();
        assert_eq!(r.chi, IntPolynomial::from_i64s(&[-1, 3, -3, 1]));
        let braid = make_arrangement(ArrangementFamily::Braid, 4, 1).unwrap();
        assert_eq!(chi_by_interpolation(&braid, 0).unwrap().chi, pi(4).characteristic_polynomial());
        let pts = [(1, 2), (2, 5), (3, 10)].map(|(a, b)| (BigInt::from(a), BigInt::from(b)));
        assert_eq!(interpolate(&pts).unwrap(), IntPolynomial::from_i64s(&[1, 0, 1]));
    }
}
