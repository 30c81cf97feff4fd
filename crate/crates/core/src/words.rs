//! Free-group words in syllable form.
//!
//! A [`Word`] is always kept freely reduced: adjacent syllables carry distinct
//! generators and no exponent is zero. Equality of words is therefore equality
//! in the free group. Words do not know their alphabet; the [`Alphabet`] is
//! used to parse, print and validate them.

use std::collections::HashMap;
use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};

/// Index of a generator inside its owning [`Alphabet`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GeneratorId(pub usize);

impl GeneratorId {
    pub fn index(self) -> usize {
        self.0
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word {
    syllables: Vec<(GeneratorId, i64)>,
}

impl Word {
    pub fn identity() -> Self {
        Word::default()
    }

    pub fn generator(g: GeneratorId) -> Self {
        Word { syllables: vec![(g, 1)] }
    }

    pub fn power_of(g: GeneratorId, e: i64) -> Self {
        Word::reduce([(g, e)])
    }

    /// Freely reduces a raw list of `(generator, exponent)` pairs.
    pub fn reduce<I>(raw: I) -> Self
    where
        I: IntoIterator<Item = (GeneratorId, i64)>,
    {
        let mut out: Vec<(GeneratorId, i64)> = Vec::new();
        for (g, e) in raw {
            push_syllable(&mut out, g, e);
        }
        Word { syllables: out }
    }

    pub fn syllables(&self) -> &[(GeneratorId, i64)] {
        &self.syllables
    }

    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty()
    }

    /// Letter length, i.e. the sum of absolute exponents.
    pub fn len(&self) -> usize {
        self.syllables.iter().map(|&(_, e)| e.unsigned_abs() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.is_identity()
    }

    /// Iterates over single letters `(g, ±1)` from left to right.
    pub fn letters(&self) -> impl Iterator<Item = (GeneratorId, i64)> + '_ {
        self.syllables
            .iter()
            .flat_map(|&(g, e)| std::iter::repeat_n((g, e.signum()), e.unsigned_abs() as usize))
    }

    pub fn generators(&self) -> impl Iterator<Item = GeneratorId> + '_ {
        self.syllables.iter().map(|&(g, _)| g)
    }

    pub fn multiply(&self, other: &Word) -> Word {
        let mut out = self.syllables.clone();
        for &(g, e) in &other.syllables {
            push_syllable(&mut out, g, e);
        }
        Word { syllables: out }
    }

    pub fn inverse(&self) -> Word {
        Word {
            syllables: self.syllables.iter().rev().map(|&(g, e)| (g, -e)).collect(),
        }
    }

    /// Returns `g⁻¹ · self · g`.
    pub fn conjugate(&self, g: &Word) -> Word {
        g.inverse().multiply(self).multiply(g)
    }

    pub fn pow(&self, e: i64) -> Word {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut out = Word::identity();
        for _ in 0..e.unsigned_abs() {
            out = out.multiply(&base);
        }
        out
    }

    /// Substitutes `images[g]` for every generator `g`.
    pub fn apply_hom(&self, images: &[Option<Word>]) -> Result<Word> {
        let mut out = Word::identity();
        for &(g, e) in &self.syllables {
            let img = images
                .get(g.0)
                .and_then(|w| w.as_ref())
                .ok_or_else(|| Error::MissingImage(format!("#{}", g.0)))?;
            out = out.multiply(&img.pow(e));
        }
        Ok(out)
    }

    /// Like [`Word::apply_hom`] but with a complete image table.
    pub fn substitute(&self, images: &[Word]) -> Result<Word> {
        let mut out = Word::identity();
        for &(g, e) in &self.syllables {
            let img = images.get(g.0).ok_or(Error::GeneratorOutOfRange {
                index: g.0,
                size: images.len(),
            })?;
            out = out.multiply(&img.pow(e));
        }
        Ok(out)
    }

    /// Total exponent sum; every generator occurring must be meridional.
    pub fn exponent_sum(&self, alphabet: &Alphabet) -> Result<i64> {
        let mut total = 0;
        for &(g, e) in &self.syllables {
            let gen = alphabet.get(g)?;
            if !gen.meridional {
                return Err(Error::NonMeridional(gen.name.clone()));
            }
            total += e;
        }
        Ok(total)
    }

    /// Cyclically reduced form: strips matching syllables off both ends.
    pub fn cyclically_reduced(&self) -> Word {
        let mut w = self.clone();
        while w.syllables.len() >= 2 && w.syllables[0].0 == w.syllables[w.syllables.len() - 1].0 {
            let (g, e) = w.syllables[w.syllables.len() - 1];
            w = Word::power_of(g, e).multiply(&w).multiply(&Word::power_of(g, -e));
        }
        w
    }

    /// Whether `other` is a cyclic rotation of `self` or of its inverse.
    pub fn is_rotation_or_inverse_of(&self, other: &Word) -> bool {
        let a: Vec<_> = self.cyclically_reduced().letters().collect();
        let b: Vec<_> = other.cyclically_reduced().letters().collect();
        if a.len() != b.len() {
            return false;
        }
        if a.is_empty() {
            return true;
        }
        let b_inv: Vec<_> = b.iter().rev().map(|&(g, e)| (g, -e)).collect();
        let n = a.len();
        (0..n).any(|shift| {
            let rotated = (0..n).map(|i| a[(i + shift) % n]);
            rotated.clone().eq(b.iter().copied()) || rotated.eq(b_inv.iter().copied())
        })
    }
}

fn push_syllable(out: &mut Vec<(GeneratorId, i64)>, g: GeneratorId, e: i64) {
    if e == 0 {
        return;
    }
    if let Some(last) = out.last_mut() {
        if last.0 == g {
            last.1 += e;
            if last.1 == 0 {
                out.pop();
            }
            return;
        }
    }
    out.push((g, e));
}

impl Mul<&Word> for &Word {
    type Output = Word;

    fn mul(self, rhs: &Word) -> Word {
        self.multiply(rhs)
    }
}

impl Mul for Word {
    type Output = Word;

    fn mul(self, rhs: Word) -> Word {
        self.multiply(&rhs)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Generator {
    pub name: String,
    /// Meridional generators map to 1 under the abelianization to Z.
    pub meridional: bool,
}

/// Ordered list of named generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Alphabet {
    gens: Vec<Generator>,
}

impl Alphabet {
    pub fn new(gens: Vec<Generator>) -> Result<Self> {
        let mut seen = HashMap::new();
        for (i, g) in gens.iter().enumerate() {
            if g.name.is_empty() || g.name == "1" || g.name.contains(['^', '(', ')', ' ']) {
                return Err(Error::Invalid(format!("bad generator name `{}`", g.name)));
            }
            if seen.insert(g.name.clone(), i).is_some() {
                return Err(Error::DuplicateGenerator(g.name.clone()));
            }
        }
        Ok(Alphabet { gens })
    }

    /// Convenience constructor: all generators share the same meridional flag.
    pub fn from_names(names: &[&str], meridional: bool) -> Result<Self> {
        Alphabet::new(
            names
                .iter()
                .map(|n| Generator { name: n.to_string(), meridional })
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn generators(&self) -> &[Generator] {
        &self.gens
    }

    pub fn ids(&self) -> impl Iterator<Item = GeneratorId> {
        (0..self.gens.len()).map(GeneratorId)
    }

    pub fn get(&self, g: GeneratorId) -> Result<&Generator> {
        self.gens.get(g.0).ok_or(Error::GeneratorOutOfRange {
            index: g.0,
            size: self.gens.len(),
        })
    }

    pub fn name(&self, g: GeneratorId) -> &str {
        &self.gens[g.0].name
    }

    pub fn id(&self, name: &str) -> Result<GeneratorId> {
        self.gens
            .iter()
            .position(|g| g.name == name)
            .map(GeneratorId)
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }

    /// Checks that every generator of `w` belongs to this alphabet.
    pub fn validate(&self, w: &Word) -> Result<()> {
        for g in w.generators() {
            self.get(g)?;
        }
        Ok(())
    }

    /// Parses whitespace separated `name^k` tokens; `1` or the empty string is the identity.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        let mut raw = Vec::new();
        for token in text.split_whitespace() {
            if token == "1" {
                continue;
            }
            let (name, exp) = match token.split_once('^') {
                Some((name, exp)) => {
                    let e: i64 = exp.parse().map_err(|_| Error::ParseWord {
                        token: token.to_string(),
                        reason: "exponent is not an integer".into(),
                    })?;
                    if e == 0 {
                        return Err(Error::ParseWord {
                            token: token.to_string(),
                            reason: "zero exponent".into(),
                        });
                    }
                    (name, e)
                }
                None => (token, 1),
            };
            raw.push((self.id(name)?, exp));
        }
        Ok(Word::reduce(raw))
    }

    pub fn format_word(&self, w: &Word) -> String {
        if w.is_identity() {
            return "1".to_string();
        }
        w.syllables()
            .iter()
            .map(|&(g, e)| {
                let name = self
                    .gens
                    .get(g.0)
                    .map(|g| g.name.clone())
                    .unwrap_or_else(|| format!("#{}", g.0));
                if e == 1 {
                    name
                } else {
                    format!("{name}^{e}")
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn display<'a>(&'a self, w: &'a Word) -> DisplayWord<'a> {
        DisplayWord { alphabet: self, word: w }
    }
}

pub struct DisplayWord<'a> {
    alphabet: &'a Alphabet,
    word: &'a Word,
}

impl fmt::Display for DisplayWord<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.alphabet.format_word(self.word))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sta() -> Alphabet {
        Alphabet::from_names(&["s", "t", "a"], true).unwrap()
    }

    fn w(text: &str) -> Word {
        sta().parse_word(text).unwrap()
    }

    const S: GeneratorId = GeneratorId(0);
    const T: GeneratorId = GeneratorId(1);
    const A: GeneratorId = GeneratorId(2);

    #[test]
    fn reduce_examples() {
        assert!(Word::reduce([(S, 1), (S, -1)]).is_identity());
        assert_eq!(Word::reduce([(S, 2), (S, 3)]), Word::power_of(S, 5));
        assert_eq!(
            Word::reduce([(S, 1), (T, -1), (T, 1), (S, -1), (A, 2)]),
            Word::power_of(A, 2)
        );
    }

    #[test]
    fn group_operations() {
        assert_eq!(w("s t").multiply(&w("t^-1")), w("s"));
        assert_eq!(w("s t^-1 s").inverse(), w("s^-1 t s^-1"));
        assert_eq!(w("s^2").conjugate(&w("a")), w("a^-1 s^2 a"));
        assert_eq!(w("s t").pow(-2), w("t^-1 s^-1 t^-1 s^-1"));
    }

    #[test]
    fn parse_and_format() {
        let a = sta();
        let word = a.parse_word("s t^-1 s^-1 t s").unwrap();
        assert_eq!(a.format_word(&word), "s t^-1 s^-1 t s");
        assert_eq!(a.format_word(&Word::identity()), "1");
        assert!(a.parse_word("1").unwrap().is_identity());
        assert!(a.parse_word("").unwrap().is_identity());
        assert!(a.parse_word("s^0").is_err());
        assert!(a.parse_word("q").is_err());
        assert!(a.parse_word("s^x").is_err());
        assert_eq!(a.parse_word("s s s^-1").unwrap(), w("s"));
    }

    #[test]
    fn apply_hom_and_missing_image() {
        let img = vec![Some(w("a s a^-4")), None, Some(w("t"))];
        assert_eq!(w("s").apply_hom(&img).unwrap(), w("a s a^-4"));
        assert!(Word::identity().apply_hom(&[]).unwrap().is_identity());
        assert!(matches!(w("t").apply_hom(&img), Err(Error::MissingImage(_))));
    }

    #[test]
    fn exponent_sums() {
        let a = sta();
        assert_eq!(w("s t^-1 s^-1 t s").exponent_sum(&a).unwrap(), 1);
        assert_eq!(Word::identity().exponent_sum(&a).unwrap(), 0);
        let mixed = Alphabet::new(vec![
            Generator { name: "s".into(), meridional: true },
            Generator { name: "a".into(), meridional: false },
        ])
        .unwrap();
        let word = mixed.parse_word("s a").unwrap();
        assert!(matches!(word.exponent_sum(&mixed), Err(Error::NonMeridional(_))));
    }

    #[test]
    fn rotations() {
        assert!(w("s t a").is_rotation_or_inverse_of(&w("a s t")));
        assert!(w("s t a").is_rotation_or_inverse_of(&w("t^-1 s^-1 a^-1")));
        assert!(!w("s t a").is_rotation_or_inverse_of(&w("s a t")));
        assert_eq!(w("a s t a^-1").cyclically_reduced(), w("s t"));
    }

    #[test]
    fn alphabet_validation() {
        assert!(Alphabet::from_names(&["s", "s"], true).is_err());
        assert!(Alphabet::from_names(&["1"], true).is_err());
        let a = sta();
        assert!(a.validate(&Word::generator(GeneratorId(7))).is_err());
    }

    fn arb_raw() -> impl Strategy<Value = Vec<(GeneratorId, i64)>> {
        prop::collection::vec((0usize..3, -3i64..=3), 0..16)
            .prop_map(|v| v.into_iter().map(|(g, e)| (GeneratorId(g), e)).collect())
    }

    proptest! {
        #[test]
        fn reduce_is_idempotent_and_normal(raw in arb_raw()) {
            let once = Word::reduce(raw.clone());
            let twice = Word::reduce(once.syllables().to_vec());
            prop_assert_eq!(&once, &twice);
            for pair in once.syllables().windows(2) {
                prop_assert_ne!(pair[0].0, pair[1].0);
            }
            prop_assert!(once.syllables().iter().all(|&(_, e)| e != 0));
        }

        #[test]
        fn inverse_cancels(raw in arb_raw()) {
            let x = Word::reduce(raw);
            prop_assert!(x.multiply(&x.inverse()).is_identity());
        }

        #[test]
        fn exponent_sum_is_additive(u in arb_raw(), v in arb_raw()) {
            let a = sta();
            let (u, v) = (Word::reduce(u), Word::reduce(v));
            prop_assert_eq!(
                u.multiply(&v).exponent_sum(&a).unwrap(),
                u.exponent_sum(&a).unwrap() + v.exponent_sum(&a).unwrap()
            );
        }

        #[test]
        fn apply_hom_is_a_homomorphism(u in arb_raw(), v in arb_raw(), imgs in prop::collection::vec(arb_raw(), 3)) {
            let images: Vec<Option<Word>> = imgs.into_iter().map(|r| Some(Word::reduce(r))).collect();
            let (u, v) = (Word::reduce(u), Word::reduce(v));
            let lhs = u.multiply(&v).apply_hom(&images).unwrap();
            let rhs = u.apply_hom(&images).unwrap().multiply(&v.apply_hom(&images).unwrap());
            prop_assert_eq!(lhs, rhs);
            prop_assert_eq!(
                u.inverse().apply_hom(&images).unwrap(),
                u.apply_hom(&images).unwrap().inverse()
            );
        }
    }
}
