//! Finite root data, affine weights and affine coweights.
//!
//! Finite roots are indexed: the `N` positive roots come first (sorted by
//! height, simple roots `α_1..α_n` at indices `0..n`), followed by their
//! negatives in the same order.  Affine simple indices run over `0..=n`
//! with `0` standing for `α_0 = -θ + δ`.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{int, Rat};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CartanType {
    pub letter: char,
    pub rank: usize,
}

impl CartanType {
    pub fn new(letter: char, rank: usize) -> Result<Self> {
        let letter = letter.to_ascii_uppercase();
        let ok = match letter {
            'A' => rank >= 1,
            'B' | 'C' => rank >= 2,
            'D' => rank >= 4,
            'E' => (6..=8).contains(&rank),
            'F' => rank == 4,
            'G' => rank == 2,
            _ => false,
        };
        if ok {
            Ok(CartanType { letter, rank })
        } else {
            Err(Error::InvalidType { letter, rank })
        }
    }

    /// Accepts tags such as `A2`, `G2`, `A3affine`, `A3~` or `A3^(1)`; the
    /// affine suffix is optional since every system here is untwisted affine.
    pub fn parse(tag: &str) -> Result<Self> {
        let t = tag.trim();
        let t =
            t.strip_suffix("affine").or_else(|| t.strip_suffix('~')).or_else(|| t.strip_suffix("^(1)")).unwrap_or(t);
        let t = t.replace('_', "");
        let mut chars = t.chars();
        let letter = chars.next().ok_or_else(|| Error::BadTypeTag(tag.into()))?;
        let rank: usize = chars.as_str().parse().map_err(|_| Error::BadTypeTag(tag.into()))?;
        CartanType::new(letter, rank)
    }

    /// Order of the finite Weyl group, from the classical formulas.
    pub fn weyl_order(&self) -> u64 {
        let fact = |n: usize| (1..=n as u64).product::<u64>();
        let n = self.rank;
        match self.letter {
            'A' => fact(n + 1),
            'B' | 'C' => (1u64 << n) * fact(n),
            'D' => (1u64 << (n - 1)) * fact(n),
            'E' => match n {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
            'F' => 1152,
            _ => 12,
        }
    }

    /// Symmetric bilinear form on simple roots up to scale (Bourbaki labels).
    fn relative_form(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut b = vec![vec![0i64; n]; n];
        let link = |i: usize, j: usize, v: i64, b: &mut Vec<Vec<i64>>| {
            b[i][j] = v;
            b[j][i] = v;
        };
        match self.letter {
            'A' | 'D' | 'E' => {
                for i in 0..n {
                    b[i][i] = 2;
                }
                match self.letter {
                    'A' => (0..n - 1).for_each(|i| link(i, i + 1, -1, &mut b)),
                    'D' => {
                        (0..n - 2).for_each(|i| link(i, i + 1, -1, &mut b));
                        link(n - 3, n - 1, -1, &mut b);
                    }
                    _ => {
                        link(0, 2, -1, &mut b);
                        link(1, 3, -1, &mut b);
                        (2..n - 1).for_each(|i| link(i, i + 1, -1, &mut b));
                    }
                }
            }
            'B' => {
                for i in 0..n {
                    b[i][i] = if i == n - 1 { 2 } else { 4 };
                }
                (0..n - 1).for_each(|i| link(i, i + 1, -2, &mut b));
            }
            'C' => {
                for i in 0..n {
                    b[i][i] = if i == n - 1 { 4 } else { 2 };
                }
                (0..n - 2).for_each(|i| link(i, i + 1, -1, &mut b));
                link(n - 2, n - 1, -2, &mut b);
            }
            'F' => {
                b[0][0] = 4;
                b[1][1] = 4;
                b[2][2] = 2;
                b[3][3] = 2;
                link(0, 1, -2, &mut b);
                link(1, 2, -2, &mut b);
                link(2, 3, -1, &mut b);
            }
            _ => {
                b[0][0] = 2;
                b[1][1] = 6;
                link(0, 1, -3, &mut b);
            }
        }
        b
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.letter, self.rank)
    }
}

/// Immutable finite root datum of an irreducible type, with the form
/// normalized so that the highest root has squared length 2.
#[derive(Debug, Clone)]
pub struct FiniteCartanData {
    pub ty: CartanType,
    /// `cartan[i][j] = ⟨α_j, α_i∨⟩`.
    pub cartan: Vec<Vec<i64>>,
    /// `form[i][j] = (α_i | α_j)`.
    pub form: Vec<Vec<Rat>>,
    /// `(α_i∨ | α_j∨)`; always integral.
    pub coroot_form: Vec<Vec<i64>>,
    /// `2 / (α_i | α_i)`; always integral.
    pub two_over_norm: Vec<i64>,
    roots: Vec<Vec<i64>>,
    coroots: Vec<Vec<i64>>,
    /// `⟨α_r, α_i∨⟩` for each finite root `r`.
    root_on_coroots: Vec<Vec<i64>>,
    index: HashMap<Vec<i64>, usize>,
    num_positive: usize,
    theta: usize,
    pub marks: Vec<i64>,
    pub comarks: Vec<i64>,
    /// Half-sum of positive roots in simple-root coordinates.
    pub rho: Vec<Rat>,
    /// `⟨ω_k, ω_j∨⟩`.
    fund_pairing: Vec<Vec<Rat>>,
    /// `ω_i∨` in simple-coroot coordinates, scaled by `coweight_scale`.
    scaled_fund_coweights: Vec<Vec<i64>>,
    coweight_scale: i64,
}

pub fn build_root_system(letter: char, rank: usize) -> Result<FiniteCartanData> {
    Ok(FiniteCartanData::new(CartanType::new(letter, rank)?))
}

impl FiniteCartanData {
    pub fn new(ty: CartanType) -> Self {
        let n = ty.rank;
        let b = ty.relative_form();
        let cartan: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| 2 * b[i][j] / b[i][i]).collect()).collect();

        let pos = positive_roots(&cartan);
        let num_positive = pos.len();
        let theta = num_positive - 1;
        let marks = pos[theta].clone();

        let rel = |x: &[i64], y: &[i64]| -> i64 {
            let mut s = 0;
            for i in 0..n {
                for j in 0..n {
                    s += x[i] * b[i][j] * y[j];
                }
            }
            s
        };
        let scale = Rat::new(2.into(), rel(&marks, &marks).into());
        let form: Vec<Vec<Rat>> = b.iter().map(|row| row.iter().map(|&v| int(v) * &scale).collect()).collect();
        let two_over_norm: Vec<i64> = (0..n).map(|i| to_int(&(int(2) / &form[i][i]))).collect();
        let coroot_form: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| to_int(&(int(4) * &form[i][j] / (&form[i][i] * &form[j][j])))).collect())
            .collect();

        let mut roots = pos.clone();
        roots.extend(pos.iter().map(|r| r.iter().map(|x| -x).collect::<Vec<_>>()));
        let coroots: Vec<Vec<i64>> = roots
            .iter()
            .map(|r| {
                let norm = int(rel(r, r)) * &scale;
                (0..n).map(|i| to_int(&(int(r[i]) * &form[i][i] / &norm))).collect()
            })
            .collect();
        let root_on_coroots: Vec<Vec<i64>> =
            roots.iter().map(|r| (0..n).map(|i| (0..n).map(|j| cartan[i][j] * r[j]).sum()).collect()).collect();
        let index = roots.iter().enumerate().map(|(k, r)| (r.clone(), k)).collect();
        let comarks = coroots[theta].clone();

        let mut rho = vec![Rat::zero(); n];
        for r in &pos {
            for i in 0..n {
                rho[i] += int(r[i]);
            }
        }
        let rho = rho.into_iter().map(|x| x / int(2)).collect();

        let inv = invert(&cartan);
        // ω_j∨ = Σ_i inv[j][i] α_i∨ and ⟨ω_k, ω_j∨⟩ = inv[j][k].
        let fund_pairing = (0..n).map(|k| (0..n).map(|j| inv[j][k].clone()).collect()).collect();
        let mut coweight_scale = 1i64;
        for row in &inv {
            for v in row {
                let d = v.denom().to_string().parse::<i64>().unwrap();
                coweight_scale = num_integer::lcm(coweight_scale, d);
            }
        }
        let scaled_fund_coweights =
            inv.iter().map(|row| row.iter().map(|v| to_int(&(v * int(coweight_scale)))).collect()).collect();

        FiniteCartanData {
            ty,
            cartan,
            form,
            coroot_form,
            two_over_norm,
            roots,
            coroots,
            root_on_coroots,
            index,
            num_positive,
            theta,
            marks,
            comarks,
            rho,
            fund_pairing,
            scaled_fund_coweights,
            coweight_scale,
        }
    }

    pub fn rank(&self) -> usize {
        self.ty.rank
    }

    pub fn num_positive(&self) -> usize {
        self.num_positive
    }

    pub fn num_roots(&self) -> usize {
        2 * self.num_positive
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.roots[..self.num_positive]
    }

    /// Simple-root coordinates of finite root `r`.
    pub fn root(&self, r: usize) -> &[i64] {
        &self.roots[r]
    }

    /// Simple-coroot coordinates of the coroot of finite root `r`.
    pub fn coroot(&self, r: usize) -> &[i64] {
        &self.coroots[r]
    }

    /// `⟨α_r, α_i∨⟩` for `i = 1..n`.
    pub fn root_on_coroots(&self, r: usize) -> &[i64] {
        &self.root_on_coroots[r]
    }

    pub fn root_index(&self, coords: &[i64]) -> Option<usize> {
        self.index.get(coords).copied()
    }

    pub fn is_positive(&self, r: usize) -> bool {
        r < self.num_positive
    }

    pub fn negate(&self, r: usize) -> usize {
        if r < self.num_positive {
            r + self.num_positive
        } else {
            r - self.num_positive
        }
    }

    /// Index of the simple root `α_i`, `i` in `1..=n`.
    pub fn simple(&self, i: usize) -> usize {
        debug_assert!(i >= 1 && i <= self.rank());
        i - 1
    }

    pub fn theta(&self) -> usize {
        self.theta
    }

    pub fn height(&self, r: usize) -> i64 {
        self.roots[r].iter().sum()
    }

    /// `⟨α_r, ξ⟩` for `ξ` in simple-coroot coordinates.
    pub fn root_on_coweight_lattice(&self, r: usize, xi: &[i64]) -> i64 {
        self.root_on_coroots[r].iter().zip(xi).map(|(a, x)| a * x).sum()
    }

    /// Index of `s_a(b)`.
    pub fn reflect_root(&self, a: usize, b: usize) -> usize {
        let c = self.root_on_coweight_lattice(b, &self.coroots[a]);
        let v: Vec<i64> = self.roots[b].iter().zip(&self.roots[a]).map(|(x, y)| x - c * y).collect();
        self.index[&v]
    }

    pub fn dynkin_adjacent(&self, i: usize, j: usize) -> bool {
        i != j && self.cartan[i - 1][j - 1] != 0
    }

    /// `ω_i∨` in simple-coroot coordinates, multiplied by [`Self::coweight_scale`].
    pub fn scaled_fundamental_coweight(&self, i: usize) -> &[i64] {
        &self.scaled_fund_coweights[i - 1]
    }

    pub fn coweight_scale(&self) -> i64 {
        self.coweight_scale
    }

    pub fn weight(&self, fin: Vec<Rat>, level: Rat, delta: Rat) -> Result<Weight> {
        check_len(fin.len(), self.rank())?;
        Ok(Weight { ty: self.ty, fin, level, delta })
    }

    pub fn coweight(&self, fin: Vec<Rat>, d: Rat, k: Rat) -> Result<Coweight> {
        check_len(fin.len(), self.rank())?;
        Ok(Coweight { ty: self.ty, fin, d, k })
    }

    pub fn zero_weight(&self) -> Weight {
        Weight { ty: self.ty, fin: vec![Rat::zero(); self.rank()], level: Rat::zero(), delta: Rat::zero() }
    }

    pub fn zero_coweight(&self) -> Coweight {
        Coweight { ty: self.ty, fin: vec![Rat::zero(); self.rank()], d: Rat::zero(), k: Rat::zero() }
    }

    /// Affine fundamental weight `Λ_i`, `i` in `0..=n`.
    pub fn affine_fundamental_weight(&self, i: usize) -> Result<Weight> {
        self.check_affine_index(i)?;
        let mut w = self.zero_weight();
        if i == 0 {
            w.level = Rat::one();
        } else {
            w.fin[i - 1] = Rat::one();
            w.level = int(self.comarks[i - 1]);
        }
        Ok(w)
    }

    pub fn null_root(&self) -> Weight {
        let mut w = self.zero_weight();
        w.delta = Rat::one();
        w
    }

    /// Affine fundamental coweight `Λ̌_i` (`Λ̌_0 = d`, `Λ̌_i = ω_i∨ + a_i d`).
    pub fn affine_fundamental_coweight(&self, i: usize) -> Result<Coweight> {
        self.check_affine_index(i)?;
        let mut c = self.zero_coweight();
        if i == 0 {
            c.d = Rat::one();
        } else {
            c.fin[i - 1] = Rat::one();
            c.d = int(self.marks[i - 1]);
        }
        Ok(c)
    }

    /// Finite fundamental coweight `ω_i∨`, `i` in `1..=n`, viewed at level zero.
    pub fn fundamental_coweight(&self, i: usize) -> Result<Coweight> {
        if i == 0 || i > self.rank() {
            return Err(Error::IndexOutOfRange { index: i, max: self.rank() });
        }
        let mut c = self.zero_coweight();
        c.fin[i - 1] = Rat::one();
        Ok(c)
    }

    /// The canonical central element `K`.
    pub fn central_coweight(&self) -> Coweight {
        let mut c = self.zero_coweight();
        c.k = Rat::one();
        c
    }

    fn check_affine_index(&self, i: usize) -> Result<()> {
        if i > self.rank() {
            Err(Error::IndexOutOfRange { index: i, max: self.rank() })
        } else {
            Ok(())
        }
    }

    /// The natural pairing `⟨λ, η⟩`.
    pub fn pair(&self, lambda: &Weight, eta: &Coweight) -> Result<Rat> {
        if lambda.ty != self.ty || eta.ty != self.ty {
            return Err(Error::ContextMismatch);
        }
        let mut s = &lambda.level * &eta.k + &lambda.delta * &eta.d;
        for (k, m) in lambda.fin.iter().enumerate() {
            if m.is_zero() {
                continue;
            }
            for (j, c) in eta.fin.iter().enumerate() {
                if !c.is_zero() {
                    s += m * c * &self.fund_pairing[k][j];
                }
            }
        }
        Ok(s)
    }

    /// `⟨α_r + kδ, η⟩` for an affine real root.
    pub fn root_on_coweight(&self, r: usize, k: i64, eta: &Coweight) -> Rat {
        let mut s = int(k) * &eta.d;
        for (a, c) in self.roots[r].iter().zip(&eta.fin) {
            if *a != 0 {
                s += int(*a) * c;
            }
        }
        s
    }

    /// `⟨α_i, η⟩` for the affine simple root with index `i` in `0..=n`.
    pub fn simple_on_coweight(&self, i: usize, eta: &Coweight) -> Rat {
        if i == 0 {
            let t = self.theta;
            self.root_on_coweight(self.negate(t), 1, eta)
        } else {
            eta.fin[i - 1].clone()
        }
    }

    /// `⟨λ, α_i∨⟩` for the affine simple coroot with index `i` in `0..=n`.
    pub fn weight_on_simple_coroot(&self, i: usize, lambda: &Weight) -> Rat {
        if i == 0 {
            let mut s = lambda.level.clone();
            for (m, a) in lambda.fin.iter().zip(&self.comarks) {
                s -= m * int(*a);
            }
            s
        } else {
            lambda.fin[i - 1].clone()
        }
    }

    /// Components of the Dynkin subdiagram on `subset` (indices `1..=n`).
    pub fn components(&self, subset: &[usize]) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.rank() + 1];
        let mut out = Vec::new();
        for &start in subset {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut k = 0;
            while k < comp.len() {
                let i = comp[k];
                for &j in subset {
                    if !seen[j] && self.dynkin_adjacent(i, j) {
                        seen[j] = true;
                        comp.push(j);
                    }
                }
                k += 1;
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Highest root of the root subsystem spanned by `component`.
    pub fn highest_root_of(&self, component: &[usize]) -> usize {
        (0..self.num_positive)
            .filter(|&r| self.roots[r].iter().enumerate().all(|(i, &a)| a == 0 || component.contains(&(i + 1))))
            .max_by_key(|&r| self.height(r))
            .expect("component is nonempty")
    }
}

fn check_len(got: usize, expected: usize) -> Result<()> {
    if got == expected {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, got })
    }
}

fn to_int(r: &Rat) -> i64 {
    assert!(r.is_integer(), "expected an integer, got {r}");
    r.to_integer().to_string().parse().unwrap()
}

/// Positive roots by closure under simple root strings, sorted by height
/// with the simple roots first in label order.
fn positive_roots(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = cartan.len();
    let unit = |i: usize| {
        let mut v = vec![0i64; n];
        v[i] = 1;
        v
    };
    let mut all: Vec<Vec<i64>> = (0..n).map(unit).collect();
    let mut known: std::collections::HashSet<Vec<i64>> = all.iter().cloned().collect();
    let mut layer = all.clone();
    while !layer.is_empty() {
        let mut next = Vec::new();
        for beta in &layer {
            for i in 0..n {
                let pairing: i64 = (0..n).map(|j| cartan[i][j] * beta[j]).sum();
                let mut p = 0;
                let mut probe = beta.clone();
                loop {
                    probe[i] -= 1;
                    if known.contains(&probe) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                if p - pairing > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if known.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        all.extend(next.iter().cloned());
        layer = next;
    }
    all.sort_by(|a, b| {
        let ha: i64 = a.iter().sum();
        let hb: i64 = b.iter().sum();
        ha.cmp(&hb).then_with(|| b.cmp(a))
    });
    all
}

/// Exact inverse of an integer matrix.
fn invert(m: &[Vec<i64>]) -> Vec<Vec<Rat>> {
    let n = m.len();
    let mut a: Vec<Vec<Rat>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<Rat> = row.iter().map(|&v| int(v)).collect();
            r.extend((0..n).map(|j| if i == j { Rat::one() } else { Rat::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero()).expect("singular");
        a.swap(col, piv);
        let p = a[col][col].clone();
        for v in a[col].iter_mut() {
            *v /= &p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in 0..2 * n {
                    let t = &f * &a[col][c];
                    a[r][c] -= t;
                }
            }
        }
    }
    a.into_iter().map(|r| r[n..].to_vec()).collect()
}

/// Affine weight `Σ fin_i ω_i + level·Λ_0 + delta·δ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Weight {
    pub ty: CartanType,
    pub fin: Vec<Rat>,
    pub level: Rat,
    pub delta: Rat,
}

/// Affine coweight `Σ fin_i ω_i∨ + d·d + k·K`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coweight {
    pub ty: CartanType,
    pub fin: Vec<Rat>,
    pub d: Rat,
    pub k: Rat,
}

macro_rules! linear_ops {
    ($t:ident, $a:ident, $b:ident) => {
        impl $t {
            pub fn scale(&self, c: &Rat) -> $t {
                $t { ty: self.ty, fin: self.fin.iter().map(|x| x * c).collect(), $a: &self.$a * c, $b: &self.$b * c }
            }
        }

        impl Add for &$t {
            type Output = $t;
            fn add(self, o: &$t) -> $t {
                assert_eq!(self.ty, o.ty, "mixed root systems");
                $t {
                    ty: self.ty,
                    fin: self.fin.iter().zip(&o.fin).map(|(x, y)| x + y).collect(),
                    $a: &self.$a + &o.$a,
                    $b: &self.$b + &o.$b,
                }
            }
        }

        impl Sub for &$t {
            type Output = $t;
            fn sub(self, o: &$t) -> $t {
                self + &(-o)
            }
        }

        impl Neg for &$t {
            type Output = $t;
            fn neg(self) -> $t {
                $t { ty: self.ty, fin: self.fin.iter().map(|x| -x).collect(), $a: -&self.$a, $b: -&self.$b }
            }
        }
    };
}

linear_ops!(Weight, level, delta);
linear_ops!(Coweight, d, k);

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fin: Vec<String> = self.fin.iter().map(|x| x.to_string()).collect();
        write!(f, "([{}], level {}, delta {})", fin.join(", "), self.level, self.delta)
    }
}

impl fmt::Display for Coweight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fin: Vec<String> = self.fin.iter().map(|x| x.to_string()).collect();
        write!(f, "([{}], d {}, K {})", fin.join(", "), self.d, self.k)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_types() -> Vec<CartanType> {
        let mut v = Vec::new();
        for n in 1..=5 {
            v.push(CartanType::new('A', n).unwrap());
        }
        for n in 2..=4 {
            v.push(CartanType::new('B', n).unwrap());
            v.push(CartanType::new('C', n).unwrap());
        }
        for n in 4..=5 {
            v.push(CartanType::new('D', n).unwrap());
        }
        for n in 6..=8 {
            v.push(CartanType::new('E', n).unwrap());
        }
        v.push(CartanType::new('F', 4).unwrap());
        v.push(CartanType::new('G', 2).unwrap());
        v
    }

    fn positive_count(ty: CartanType) -> usize {
        let n = ty.rank;
        match ty.letter {
            'A' => n * (n + 1) / 2,
            'B' | 'C' => n * n,
            'D' => n * (n - 1),
            'E' => [36, 63, 120][n - 6],
            'F' => 24,
            _ => 6,
        }
    }

    #[test]
    fn root_counts_match_classification() {
        for ty in all_types() {
            let d = FiniteCartanData::new(ty);
            assert_eq!(d.num_positive(), positive_count(ty), "{ty}");
        }
    }

    #[test]
    fn highest_root_has_norm_two_and_known_marks() {
        let g2 = build_root_system('G', 2).unwrap();
        assert_eq!(g2.marks, vec![3, 2]);
        let e8 = build_root_system('E', 8).unwrap();
        assert_eq!(e8.marks, vec![2, 3, 4, 6, 5, 4, 3, 2]);
        let f4 = build_root_system('F', 4).unwrap();
        assert_eq!(f4.marks, vec![2, 3, 4, 2]);
        for ty in all_types() {
            let d = FiniteCartanData::new(ty);
            let t = d.root(d.theta()).to_vec();
            let mut norm = Rat::zero();
            for i in 0..ty.rank {
                for j in 0..ty.rank {
                    norm += int(t[i] * t[j]) * &d.form[i][j];
                }
            }
            assert_eq!(norm, int(2), "{ty}");
            assert_eq!(d.coroot(d.theta()), &d.comarks[..]);
        }
    }

    #[test]
    fn two_rho_pairs_to_two_with_simple_coroots() {
        for ty in all_types() {
            let d = FiniteCartanData::new(ty);
            for i in 0..ty.rank {
                let mut s = Rat::zero();
                for j in 0..ty.rank {
                    s += &d.rho[j] * int(d.cartan[i][j]);
                }
                assert_eq!(s * int(2), int(2), "{ty}");
            }
        }
    }

    #[test]
    fn reflections_permute_roots_involutively() {
        for ty in all_types() {
            let d = FiniteCartanData::new(ty);
            for r in 0..d.num_roots() {
                for s in 0..d.num_roots() {
                    let img = d.reflect_root(s, r);
                    assert_eq!(d.reflect_root(s, img), r);
                }
            }
        }
    }

    #[test]
    fn rejects_unknown_types() {
        assert!(CartanType::new('H', 3).is_err());
        assert!(CartanType::new('E', 9).is_err());
        assert!(CartanType::new('A', 0).is_err());
        assert!(CartanType::parse("A3affine").is_ok());
        assert!(CartanType::parse("Q").is_err());
    }

    #[test]
    fn fundamental_coweights_pair_dually() {
        for ty in all_types() {
            let d = FiniteCartanData::new(ty);
            for i in 0..=ty.rank {
                let l = d.affine_fundamental_weight(i).unwrap();
                for j in 0..=ty.rank {
                    // Λ_i against the affine simple coroots.
                    let v = d.weight_on_simple_coroot(j, &l);
                    assert_eq!(v, int((i == j) as i64), "{ty} Λ{i} α{j}∨");
                    let c = d.affine_fundamental_coweight(j).unwrap();
                    assert_eq!(d.simple_on_coweight(i, &c), int((i == j) as i64), "{ty} α{i} Λ̌{j}");
                }
                assert_eq!(d.pair(&l, &d.affine_fundamental_coweight(0).unwrap()).unwrap(), int(0));
            }
        }
    }

    #[test]
    fn pairing_rejects_mixed_systems() {
        let a = build_root_system('A', 2).unwrap();
        let g = build_root_system('G', 2).unwrap();
        let l = a.affine_fundamental_weight(1).unwrap();
        let c = g.fundamental_coweight(1).unwrap();
        assert_eq!(a.pair(&l, &c), Err(Error::ContextMismatch));
    }
}
