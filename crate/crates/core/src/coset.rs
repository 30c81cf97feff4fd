//! Permutation representations and coset tables.
//!
//! Permutations act on the right: a word `x₁x₂⋯` sends a point `p` to
//! `(⋯(p^x₁)^x₂⋯)`. Points are 1-based in text and 0-based in memory.
//!
//! A [`CosetTable`] indexes the right cosets `H t_i` of a subgroup `H` by a
//! prefix-closed transversal `t_1 = 1, t_2, …`. The same table also carries a
//! left transversal `g_1, …, g_k` of the left cosets `g_i H`, which is what the
//! induced representation is built on.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::presentation::Presentation;
use crate::words::{GeneratorId, Word};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation { images: (0..degree).collect() }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || std::mem::replace(&mut seen[i], true) {
                return Err(Error::InvalidPermutation(format!("{images:?} is not a bijection")));
            }
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation from 1-based cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut used = vec![false; degree];
        for cycle in cycles {
            for (k, &p) in cycle.iter().enumerate() {
                if p == 0 || p > degree {
                    return Err(Error::PointOutOfRange { point: p, degree });
                }
                if std::mem::replace(&mut used[p - 1], true) {
                    return Err(Error::InvalidPermutation(format!("point {p} repeated")));
                }
                let next = cycle[(k + 1) % cycle.len()];
                images[p - 1] = next - 1;
            }
        }
        Permutation::from_images(images)
    }

    /// Parses cycle notation such as `(2 5)(3 4)` or `(1,2,3)`; `()` is the identity.
    pub fn parse_cycles(degree: usize, text: &str) -> Result<Self> {
        let mut cycles = Vec::new();
        let mut rest = text.trim();
        while !rest.is_empty() {
            let open = rest
                .strip_prefix('(')
                .ok_or_else(|| Error::InvalidPermutation(format!("expected `(` in `{text}`")))?;
            let close = open
                .find(')')
                .ok_or_else(|| Error::InvalidPermutation(format!("unclosed cycle in `{text}`")))?;
            let cycle = open[..close]
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| Error::InvalidPermutation(format!("bad point `{t}`")))
                })
                .collect::<Result<Vec<_>>>()?;
            cycles.push(cycle);
            rest = open[close + 1..].trim_start();
        }
        Permutation::from_cycles(degree, &cycles)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of a 0-based point.
    pub fn apply(&self, p: usize) -> usize {
        self.images[p]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `self` followed by `other` (right action).
    pub fn then(&self, other: &Permutation) -> Permutation {
        Permutation { images: self.images.iter().map(|&p| other.images[p]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (p, &q) in self.images.iter().enumerate() {
            inv[q] = p;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(p, &q)| p == q)
    }

    /// Sign of the permutation, `+1` or `-1`.
    pub fn sign(&self) -> i32 {
        let mut seen = vec![false; self.images.len()];
        let mut sign = 1;
        for start in 0..self.images.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                p = self.images[p];
                len += 1;
            }
            if len % 2 == 0 {
                sign = -sign;
            }
        }
        sign
    }

    /// Nontrivial cycles, 1-based, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.images.len()];
        let mut out = Vec::new();
        for start in 0..self.images.len() {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                cycle.push(p + 1);
                p = self.images[p];
            }
            out.push(cycle);
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            let body: Vec<String> = c.iter().map(|p| p.to_string()).collect();
            write!(f, "({})", body.join(" "))?;
        }
        Ok(())
    }
}

/// A homomorphism from a presented group to a symmetric group (right action).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermRep {
    presentation: Presentation,
    images: Vec<Permutation>,
    degree: usize,
}

impl PermRep {
    pub fn new(presentation: Presentation, images: Vec<Permutation>) -> Result<Self> {
        if images.len() != presentation.num_generators() {
            return Err(Error::DimensionMismatch {
                expected: presentation.num_generators(),
                found: images.len(),
            });
        }
        let degree = images.first().map_or(1, |p| p.degree());
        if let Some(p) = images.iter().find(|p| p.degree() != degree) {
            return Err(Error::DimensionMismatch { expected: degree, found: p.degree() });
        }
        let rep = PermRep { presentation, images, degree };
        for r in rep.presentation.relators() {
            if !rep.eval(r).is_identity() {
                return Err(Error::RelatorNotIdentity { relator: rep.presentation.format_word(r) });
            }
        }
        Ok(rep)
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn image(&self, g: GeneratorId) -> &Permutation {
        &self.images[g.0]
    }

    pub fn images(&self) -> &[Permutation] {
        &self.images
    }

    /// Evaluates a word left to right.
    pub fn eval(&self, w: &Word) -> Permutation {
        let mut out = Permutation::identity(self.degree);
        for &(g, e) in w.syllables() {
            let step = if e > 0 { self.images[g.0].clone() } else { self.images[g.0].inverse() };
            for _ in 0..e.unsigned_abs() {
                out = out.then(&step);
            }
        }
        out
    }

    /// Image of a 0-based point under a word, without building the permutation.
    pub fn act(&self, point: usize, w: &Word) -> usize {
        let mut p = point;
        for (g, e) in w.letters() {
            p = if e > 0 {
                self.images[g.0].apply(p)
            } else {
                self.images[g.0].images().iter().position(|&q| q == p).expect("bijection")
            };
        }
        p
    }

    /// Whether `w` fixes the 1-based `point`.
    pub fn in_stabilizer(&self, w: &Word, point: usize) -> bool {
        point >= 1 && point <= self.degree && self.act(point - 1, w) == point - 1
    }

    pub fn in_kernel(&self, w: &Word) -> bool {
        self.eval(w).is_identity()
    }
}

/// δ on `⟨s, a⟩`: `s ↦ (1)(2, 2n+1)(3, 2n)⋯(n+1, n+2)`, `a ↦ (1 2 ⋯ α)`.
pub fn dihedral_images(alpha: usize) -> Result<(Permutation, Permutation)> {
    if alpha < 3 || alpha.is_multiple_of(2) {
        return Err(Error::Invalid(format!("alpha = {alpha} must be odd and at least 3")));
    }
    // s: p ↦ α + 2 - p on 2..=α, fixing 1.
    let s_images: Vec<usize> = (0..alpha).map(|p| if p == 0 { 0 } else { alpha - p }).collect();
    let a_images: Vec<usize> = (0..alpha).map(|p| (p + 1) % alpha).collect();
    Ok((Permutation::from_images(s_images)?, Permutation::from_images(a_images)?))
}

/// The dihedral representation of a two-bridge group presented on `s` together
/// with `a` and/or `t` (where `t = a s`). Relators are checked on construction.
pub fn dihedral_rep(presentation: &Presentation, alpha: usize) -> Result<PermRep> {
    let (s, a) = dihedral_images(alpha)?;
    let t = a.then(&s);
    let images = presentation
        .alphabet()
        .generators()
        .iter()
        .map(|g| match g.name.as_str() {
            "s" => Ok(s.clone()),
            "a" => Ok(a.clone()),
            "t" => Ok(t.clone()),
            other => Err(Error::Invalid(format!(
                "dihedral representation needs generators s, a or t; found `{other}`"
            ))),
        })
        .collect::<Result<Vec<_>>>()?;
    PermRep::new(presentation.clone(), images)
}

/// Which subgroup a coset table describes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SubgroupKind {
    /// Stabilizer of a 1-based point.
    Stabilizer(usize),
    /// Kernel of the permutation representation.
    Kernel,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum CosetKey {
    Point(usize),
    Perm(Permutation),
}

/// Which words serve as left coset representatives.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LeftReps {
    /// `g_i = t_i`; used whenever the right transversal is also a left one.
    Transversal,
    /// `g_i = t_i⁻¹`.
    Inverted,
}

#[derive(Clone, Debug)]
pub struct CosetTable {
    rep: PermRep,
    kind: SubgroupKind,
    transversal: Vec<Word>,
    /// `right[g][i] = j` iff `H t_i g = H t_j`.
    right: Vec<Vec<usize>>,
    right_inv: Vec<Vec<usize>>,
    left_reps: Vec<Word>,
    left_kind: LeftReps,
    /// `left[g][i] = j` iff `g g_i ∈ g_j H`.
    left: Vec<Vec<usize>>,
    left_index: HashMap<CosetKey, usize>,
}

impl CosetTable {
    /// Table for `H = Stab(point)` with `point` 1-based.
    pub fn stabilizer(rep: &PermRep, point: usize) -> Result<Self> {
        if point == 0 || point > rep.degree() {
            return Err(Error::PointOutOfRange { point, degree: rep.degree() });
        }
        CosetTable::build(rep, SubgroupKind::Stabilizer(point))
    }

    /// Table for the kernel of `rep` (the normal core of any point stabilizer
    /// when the action is transitive).
    pub fn kernel(rep: &PermRep) -> Result<Self> {
        CosetTable::build(rep, SubgroupKind::Kernel)
    }

    pub fn build(rep: &PermRep, kind: SubgroupKind) -> Result<Self> {
        if let SubgroupKind::Stabilizer(p) = kind {
            if p == 0 || p > rep.degree() {
                return Err(Error::PointOutOfRange { point: p, degree: rep.degree() });
            }
        }
        let key = |w: &Word| -> CosetKey {
            match kind {
                SubgroupKind::Stabilizer(p) => CosetKey::Point(rep.act(p - 1, w)),
                SubgroupKind::Kernel => CosetKey::Perm(rep.eval(w)),
            }
        };

        // Orbit walk: for each generator in declaration order, follow the chain
        // t, t g, t g², … from every known representative until it closes up.
        // Repeat until no generator discovers a new coset.
        let gens: Vec<GeneratorId> = rep.presentation().alphabet().ids().collect();
        let mut transversal = vec![Word::identity()];
        let mut index: HashMap<CosetKey, usize> = HashMap::new();
        index.insert(key(&Word::identity()), 0);
        loop {
            let before = transversal.len();
            for &g in &gens {
                let step = Word::generator(g);
                let mut i = 0;
                while i < transversal.len() {
                    let mut w = transversal[i].clone();
                    loop {
                        w = w.multiply(&step);
                        let k = key(&w);
                        if index.contains_key(&k) {
                            break;
                        }
                        index.insert(k, transversal.len());
                        transversal.push(w.clone());
                    }
                    i += 1;
                }
            }
            if transversal.len() == before {
                break;
            }
        }

        let k = transversal.len();
        let mut right = vec![vec![0; k]; gens.len()];
        let mut right_inv = vec![vec![0; k]; gens.len()];
        for &g in &gens {
            for (i, t) in transversal.iter().enumerate() {
                let j = *index
                    .get(&key(&t.multiply(&Word::generator(g))))
                    .ok_or_else(|| Error::InconsistentTable("orbit not closed".into()))?;
                right[g.0][i] = j;
                right_inv[g.0][j] = i;
            }
        }

        // Left cosets g H are keyed by the right coset of g⁻¹.
        let try_left = |reps: &[Word]| -> Option<HashMap<CosetKey, usize>> {
            let mut m = HashMap::new();
            for (i, g) in reps.iter().enumerate() {
                if m.insert(key(&g.inverse()), i).is_some() {
                    return None;
                }
            }
            Some(m)
        };
        let (left_reps, left_kind, left_index) = match try_left(&transversal) {
            Some(m) => (transversal.clone(), LeftReps::Transversal, m),
            None => {
                let inv: Vec<Word> = transversal.iter().map(Word::inverse).collect();
                let m = try_left(&inv).expect("inverses of a right transversal form a left one");
                (inv, LeftReps::Inverted, m)
            }
        };
        let mut left = vec![vec![0; k]; gens.len()];
        for &g in &gens {
            for (i, gi) in left_reps.iter().enumerate() {
                let w = Word::generator(g).multiply(gi).inverse();
                left[g.0][i] = *left_index
                    .get(&key(&w))
                    .ok_or_else(|| Error::InconsistentTable("left action not closed".into()))?;
            }
        }

        Ok(CosetTable {
            rep: rep.clone(),
            kind,
            transversal,
            right,
            right_inv,
            left_reps,
            left_kind,
            left,
            left_index,
        })
    }

    pub fn index(&self) -> usize {
        self.transversal.len()
    }

    pub fn kind(&self) -> SubgroupKind {
        self.kind
    }

    pub fn perm_rep(&self) -> &PermRep {
        &self.rep
    }

    pub fn presentation(&self) -> &Presentation {
        self.rep.presentation()
    }

    /// Right transversal `t_1 = 1, …, t_k` (prefix closed).
    pub fn transversal(&self) -> &[Word] {
        &self.transversal
    }

    /// Left coset representatives `g_1, …, g_k`.
    pub fn left_reps(&self) -> &[Word] {
        &self.left_reps
    }

    pub fn left_kind(&self) -> LeftReps {
        self.left_kind
    }

    /// Right action of a generator on coset indices.
    pub fn right_action(&self, g: GeneratorId) -> &[usize] {
        &self.right[g.0]
    }

    pub fn right_step(&self, i: usize, g: GeneratorId, e: i64) -> usize {
        if e > 0 {
            self.right[g.0][i]
        } else {
            self.right_inv[g.0][i]
        }
    }

    /// Left action of a generator on coset indices (`g g_i ∈ g_j H`).
    pub fn left_action(&self, g: GeneratorId) -> &[usize] {
        &self.left[g.0]
    }

    /// Subgroup membership oracle.
    pub fn contains(&self, w: &Word) -> bool {
        match self.kind {
            SubgroupKind::Stabilizer(p) => self.rep.in_stabilizer(w, p),
            SubgroupKind::Kernel => self.rep.in_kernel(w),
        }
    }

    /// Returns `(j, h)` with `g · g_i = g_j · h` and `h` in the subgroup.
    pub fn factorize(&self, g: &Word, i: usize) -> Result<(usize, Word)> {
        let gi = self
            .left_reps
            .get(i)
            .ok_or(Error::PointOutOfRange { point: i + 1, degree: self.index() })?;
        let prod = g.multiply(gi);
        let key = match self.kind {
            SubgroupKind::Stabilizer(p) => CosetKey::Point(self.rep.act(p - 1, &prod.inverse())),
            SubgroupKind::Kernel => CosetKey::Perm(self.rep.eval(&prod.inverse())),
        };
        let j = *self
            .left_index
            .get(&key)
            .ok_or_else(|| Error::InconsistentTable("left coset not found".into()))?;
        let h = self.left_reps[j].inverse().multiply(&prod);
        if !self.contains(&h) {
            return Err(Error::InconsistentTable(format!(
                "factor {} not in subgroup",
                self.presentation().format_word(&h)
            )));
        }
        Ok((j, h))
    }

    /// Permutation of left cosets induced by a word (`i ↦ j` with `w g_i ∈ g_j H`).
    pub fn left_permutation(&self, w: &Word) -> Result<Permutation> {
        let images = (0..self.index())
            .map(|i| self.factorize(w, i).map(|(j, _)| j))
            .collect::<Result<Vec<_>>>()?;
        Permutation::from_images(images)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::{two_bridge_presentation, two_bridge_sa_form, TwoBridgeParams};

    fn fig8() -> PermRep {
        let p = two_bridge_sa_form(TwoBridgeParams::new(5, 3).unwrap());
        dihedral_rep(&p, 5).unwrap()
    }

    #[test]
    fn cycle_notation() {
        let p = Permutation::parse_cycles(5, "(2 5)(3 4)").unwrap();
        assert_eq!(p.images(), &[0, 4, 3, 2, 1]);
        assert_eq!(p.to_string(), "(2 5)(3 4)");
        assert_eq!(Permutation::parse_cycles(5, "(1,2,3,4,5)").unwrap().to_string(), "(1 2 3 4 5)");
        assert!(Permutation::parse_cycles(3, "()").unwrap().is_identity());
        assert!(Permutation::parse_cycles(3, "(1)(2)").unwrap().is_identity());
        assert!(Permutation::parse_cycles(3, "(1 4)").is_err());
        assert!(Permutation::parse_cycles(3, "(1 2)(2 3)").is_err());
        assert!(Permutation::parse_cycles(3, "1 2").is_err());
    }

    #[test]
    fn sign_and_inverse() {
        let p = Permutation::parse_cycles(5, "(1 2 3)(4 5)").unwrap();
        assert_eq!(p.sign(), -1);
        assert!(p.then(&p.inverse()).is_identity());
        assert_eq!(Permutation::parse_cycles(5, "(2 5)(3 4)").unwrap().sign(), 1);
    }

    #[test]
    fn dihedral_images_match_formula() {
        let (s, a) = dihedral_images(5).unwrap();
        assert_eq!(s.to_string(), "(2 5)(3 4)");
        assert_eq!(a.to_string(), "(1 2 3 4 5)");
        let (s, a) = dihedral_images(3).unwrap();
        assert_eq!(s.to_string(), "(2 3)");
        assert_eq!(a.to_string(), "(1 2 3)");
        let (s, _) = dihedral_images(7).unwrap();
        assert_eq!(s.to_string(), "(2 7)(3 6)(4 5)");
        assert!(dihedral_images(4).is_err());
    }

    #[test]
    fn relator_maps_to_identity_by_hand() {
        // Compose the sa-form relator letter by letter with explicit permutations.
        let s = Permutation::parse_cycles(5, "(2 5)(3 4)").unwrap();
        let a = Permutation::parse_cycles(5, "(1 2 3 4 5)").unwrap();
        let (si, ai) = (s.inverse(), a.inverse());
        let letters = [&ai, &si, &a, &s, &ai, &s, &a, &si, &ai];
        let total = letters.iter().fold(Permutation::identity(5), |acc, p| acc.then(p));
        assert!(total.is_identity());
    }

    #[test]
    fn eval_and_membership() {
        let rep = fig8();
        let p = rep.presentation();
        assert!(rep.eval(&p.parse_word("a^5").unwrap()).is_identity());
        assert_eq!(rep.eval(&p.parse_word("s").unwrap()).apply(0), 0);
        // t = a s sends 1 to 5.
        assert_eq!(rep.act(0, &p.parse_word("a s").unwrap()), 4);
        let y0 = p.parse_word("s").unwrap();
        assert!(rep.in_stabilizer(&y0, 1));
        assert!(!rep.in_kernel(&y0));
        assert!(rep.in_kernel(&y0.pow(2)));
    }

    #[test]
    fn st_form_also_carries_delta() {
        let p = two_bridge_presentation(TwoBridgeParams::new(5, 3).unwrap());
        let rep = dihedral_rep(&p, 5).unwrap();
        assert_eq!(rep.image(GeneratorId(1)).apply(0), 4);
    }

    #[test]
    fn figure_eight_stabilizer_table() {
        let rep = fig8();
        let tbl = CosetTable::stabilizer(&rep, 1).unwrap();
        let p = rep.presentation();
        assert_eq!(tbl.index(), 5);
        let names: Vec<String> = tbl.transversal().iter().map(|w| p.format_word(w)).collect();
        assert_eq!(names, ["1", "a", "a^2", "a^3", "a^4"]);
        assert_eq!(tbl.left_kind(), LeftReps::Transversal);
        let a = p.alphabet().id("a").unwrap();
        assert_eq!(tbl.right_action(a), &[1, 2, 3, 4, 0]);
        assert_eq!(tbl.left_action(a), &[1, 2, 3, 4, 0]);
    }

    #[test]
    fn figure_eight_factorize() {
        let rep = fig8();
        let tbl = CosetTable::stabilizer(&rep, 1).unwrap();
        let p = rep.presentation();
        let s = p.parse_word("s").unwrap();
        let a = p.parse_word("a").unwrap();
        assert_eq!(tbl.factorize(&s, 0).unwrap(), (0, s.clone()));
        for i in 0..4 {
            assert_eq!(tbl.factorize(&a, i).unwrap(), (i + 1, Word::identity()));
        }
        let (j, h) = tbl.factorize(&s, 1).unwrap();
        assert_eq!(j, 4);
        assert_eq!(h, p.parse_word("a^-4 s a").unwrap());
    }

    #[test]
    fn factorize_lands_in_subgroup_for_all_generators() {
        let rep = fig8();
        for tbl in [CosetTable::stabilizer(&rep, 1).unwrap(), CosetTable::kernel(&rep).unwrap()] {
            for g in rep.presentation().alphabet().ids() {
                for i in 0..tbl.index() {
                    let (_, h) = tbl.factorize(&Word::generator(g), i).unwrap();
                    assert!(tbl.contains(&h));
                }
            }
        }
    }

    #[test]
    fn kernel_table_indices() {
        let rep = fig8();
        let n = CosetTable::kernel(&rep).unwrap();
        let h = CosetTable::stabilizer(&rep, 1).unwrap();
        assert_eq!(n.index(), 10);
        assert_eq!(h.index(), 5);
        assert_eq!(n.index() / h.index(), 2);
        let p = rep.presentation();
        let names: Vec<String> = n.transversal().iter().map(|w| p.format_word(w)).collect();
        assert_eq!(
            names,
            ["1", "s", "a", "a^2", "a^3", "a^4", "s a", "s a^2", "s a^3", "s a^4"]
        );
    }

    #[test]
    fn trivial_degree_one_table() {
        let p = two_bridge_sa_form(TwoBridgeParams::new(5, 3).unwrap());
        let one = Permutation::identity(1);
        let rep = PermRep::new(p, vec![one.clone(), one]).unwrap();
        let tbl = CosetTable::stabilizer(&rep, 1).unwrap();
        assert_eq!(tbl.index(), 1);
        assert!(tbl.transversal()[0].is_identity());
        assert!(CosetTable::stabilizer(&rep, 2).is_err());
    }

    #[test]
    fn bad_images_are_rejected() {
        let p = two_bridge_sa_form(TwoBridgeParams::new(5, 3).unwrap());
        let a = Permutation::parse_cycles(5, "(1 2 3 4 5)").unwrap();
        let s = Permutation::parse_cycles(5, "(1 2)").unwrap();
        assert!(matches!(PermRep::new(p, vec![s, a]), Err(Error::RelatorNotIdentity { .. })));
    }

    #[test]
    fn kernel_is_normal_core() {
        let rep = fig8();
        let tbl = CosetTable::kernel(&rep).unwrap();
        let p = rep.presentation();
        let samples = ["s^2", "a^5", "s a^5 s^-1", "a s a^-4 s^-1", "s a s a^-4"];
        for text in samples {
            let w = p.parse_word(text).unwrap();
            assert!(tbl.contains(&w), "{text}");
            for g in ["s", "a", "s^-1", "a^-1", "a s a"] {
                let g = p.parse_word(g).unwrap();
                assert!(tbl.contains(&w.conjugate(&g)));
            }
        }
    }

    use proptest::prelude::*;

    fn raw_word(gens: usize, max_len: usize) -> impl Strategy<Value = Word> {
        prop::collection::vec((0..gens, -2i64..=2), 0..=max_len)
            .prop_map(|v| Word::reduce(v.into_iter().map(|(g, e)| (GeneratorId(g), e))))
    }

    proptest! {
        #[test]
        fn perm_rep_is_a_homomorphism(u in raw_word(2, 16), v in raw_word(2, 16)) {
            let rep = fig8();
            prop_assert_eq!(rep.eval(&u.multiply(&v)), rep.eval(&u).then(&rep.eval(&v)));
            prop_assert!(rep.eval(&u.multiply(&u.inverse())).is_identity());
        }

        #[test]
        fn factorization_lands_in_the_subgroup(w in raw_word(2, 16), i in 0usize..5) {
            let tbl = CosetTable::stabilizer(&fig8(), 1).unwrap();
            let (j, h) = tbl.factorize(&w, i).unwrap();
            prop_assert!(tbl.contains(&h));
            let lhs = w.multiply(&tbl.left_reps()[i]);
            prop_assert_eq!(lhs, tbl.left_reps()[j].multiply(&h));
        }
    }
}
