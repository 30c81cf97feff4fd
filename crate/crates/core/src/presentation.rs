//! Finite presentations and the two-bridge knot group presentations.

use crate::error::{Error, Result};
use crate::words::{Alphabet, GeneratorId, Word};

/// Generators plus relators `r`, each read as the relation `r = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    alphabet: Alphabet,
    relators: Vec<Word>,
}

impl Presentation {
    pub fn new(alphabet: Alphabet, relators: Vec<Word>) -> Result<Self> {
        for (i, r) in relators.iter().enumerate() {
            alphabet.validate(r)?;
            if r.is_identity() {
                return Err(Error::EmptyRelator(i));
            }
        }
        Ok(Presentation { alphabet, relators })
    }

    /// Parses relators given in word syntax.
    pub fn parse(alphabet: Alphabet, relators: &[&str]) -> Result<Self> {
        let relators = relators
            .iter()
            .map(|r| alphabet.parse_word(r))
            .collect::<Result<Vec<_>>>()?;
        Presentation::new(alphabet, relators)
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn num_generators(&self) -> usize {
        self.alphabet.len()
    }

    pub fn format_word(&self, w: &Word) -> String {
        self.alphabet.format_word(w)
    }

    pub fn parse_word(&self, text: &str) -> Result<Word> {
        self.alphabet.parse_word(text)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TwoBridgeParams {
    alpha: i64,
    beta: i64,
}

impl TwoBridgeParams {
    pub fn new(alpha: i64, beta: i64) -> Result<Self> {
        let bad = |reason: &str| Error::InvalidTwoBridge { alpha, beta, reason: reason.into() };
        if alpha < 3 {
            return Err(bad("alpha must be at least 3"));
        }
        if alpha % 2 == 0 {
            return Err(bad("alpha must be odd"));
        }
        if beta <= 0 || beta >= alpha {
            return Err(bad("beta must satisfy 0 < beta < alpha"));
        }
        if gcd(alpha, beta) != 1 {
            return Err(bad("alpha and beta must be coprime"));
        }
        Ok(TwoBridgeParams { alpha, beta })
    }

    pub fn alpha(&self) -> i64 {
        self.alpha
    }

    pub fn beta(&self) -> i64 {
        self.beta
    }

    /// Signs `ε_k = (-1)^⌊kβ/α⌋` for `k = 1..α-1`, computed in exact integer arithmetic.
    pub fn epsilons(&self) -> Vec<i64> {
        (1..self.alpha)
            .map(|k| {
                let q = (k * self.beta).div_euclid(self.alpha);
                if q % 2 == 0 {
                    1
                } else {
                    -1
                }
            })
            .collect()
    }
}

fn gcd(mut a: i64, mut b: i64) -> i64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.abs()
}

/// `⟨s, t | (l_s s)(t l_s)⁻¹⟩` with `l_s = s^ε₁ t^ε₂ s^ε₃ ⋯ t^ε_{α-1}`.
pub fn two_bridge_presentation(p: TwoBridgeParams) -> Presentation {
    let alphabet = Alphabet::from_names(&["s", "t"], true).expect("static alphabet");
    let (s, t) = (GeneratorId(0), GeneratorId(1));
    let l_s = Word::reduce(
        p.epsilons()
            .into_iter()
            .enumerate()
            .map(|(i, e)| (if i % 2 == 0 { s } else { t }, e)),
    );
    let lhs = l_s.multiply(&Word::generator(s));
    let rhs = Word::generator(t).multiply(&l_s);
    let relator = lhs.multiply(&rhs.inverse());
    Presentation::new(alphabet, vec![relator]).expect("two-bridge relator is nonempty")
}

/// Rewrites `p` into a new alphabet.
///
/// `old_in_new[g]` expresses old generator `g` in the new alphabet, `new_in_old[h]`
/// expresses new generator `h` in the old one. Both composites must reduce to
/// the identity substitution.
pub fn change_generators(
    p: &Presentation,
    new_alphabet: Alphabet,
    new_in_old: &[Word],
    old_in_new: &[Word],
) -> Result<Presentation> {
    if new_in_old.len() != new_alphabet.len() {
        return Err(Error::DimensionMismatch {
            expected: new_alphabet.len(),
            found: new_in_old.len(),
        });
    }
    if old_in_new.len() != p.num_generators() {
        return Err(Error::DimensionMismatch {
            expected: p.num_generators(),
            found: old_in_new.len(),
        });
    }
    for w in new_in_old {
        p.alphabet().validate(w)?;
    }
    for w in old_in_new {
        new_alphabet.validate(w)?;
    }
    for g in p.alphabet().ids() {
        let back = old_in_new[g.0].substitute(new_in_old)?;
        if back != Word::generator(g) {
            return Err(Error::SubstitutionRoundTrip(p.alphabet().name(g).to_string()));
        }
    }
    for h in new_alphabet.ids() {
        let back = new_in_old[h.0].substitute(old_in_new)?;
        if back != Word::generator(h) {
            return Err(Error::SubstitutionRoundTrip(new_alphabet.name(h).to_string()));
        }
    }
    let relators = p
        .relators()
        .iter()
        .map(|r| r.substitute(old_in_new))
        .collect::<Result<Vec<_>>>()?;
    Presentation::new(new_alphabet, relators)
}

/// The `⟨s, a⟩` form of a two-bridge group, with `a = t s⁻¹` (so `t = a s`).
/// `a` is not meridional.
pub fn two_bridge_sa_form(p: TwoBridgeParams) -> Presentation {
    let st = two_bridge_presentation(p);
    let sa = Alphabet::new(vec![
        crate::words::Generator { name: "s".into(), meridional: true },
        crate::words::Generator { name: "a".into(), meridional: false },
    ])
    .expect("static alphabet");
    let new_in_old = [st.parse_word("s").unwrap(), st.parse_word("t s^-1").unwrap()];
    let old_in_new = [sa.parse_word("s").unwrap(), sa.parse_word("a s").unwrap()];
    change_generators(&st, sa, &new_in_old, &old_in_new).expect("t = a s is invertible")
}
