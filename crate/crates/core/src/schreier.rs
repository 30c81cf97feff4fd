//! Reidemeister–Schreier rewriting for finite-index subgroups.
//!
//! Schreier generators are `γ(i, g) = t_i · g · t_j⁻¹` with `H t_i g = H t_j`;
//! the ones that freely reduce to the identity (tree edges of the prefix-closed
//! transversal) are dropped. Subgroup relators are the rewritten conjugates
//! `t_i R t_i⁻¹` of the parent relators, kept without cyclic reduction.

use std::collections::HashMap;

use crate::coset::CosetTable;
use crate::error::{Error, Result};
use crate::presentation::Presentation;
use crate::words::{Alphabet, Generator, GeneratorId, Word};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchreierGenerator {
    pub name: String,
    /// 0-based coset index `i`.
    pub coset: usize,
    pub parent_generator: GeneratorId,
    /// Expansion in the parent alphabet.
    pub expansion: Word,
}

/// Nontrivial Schreier generators in `(coset, generator)` lexicographic order,
/// named `{prefix}0`, `{prefix}1`, ….
pub fn schreier_generators(tbl: &CosetTable, prefix: &str) -> Vec<SchreierGenerator> {
    let gens: Vec<GeneratorId> = tbl.presentation().alphabet().ids().collect();
    let mut out = Vec::new();
    for (i, t) in tbl.transversal().iter().enumerate() {
        for &g in &gens {
            let j = tbl.right_action(g)[i];
            let expansion = t
                .multiply(&Word::generator(g))
                .multiply(&tbl.transversal()[j].inverse());
            if expansion.is_identity() {
                continue;
            }
            out.push(SchreierGenerator {
                name: format!("{prefix}{}", out.len()),
                coset: i,
                parent_generator: g,
                expansion,
            });
        }
    }
    out
}

/// Where a subgroup relator came from: `t_coset · R_relator · t_coset⁻¹`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RelatorOrigin {
    pub relator: usize,
    pub coset: usize,
}

#[derive(Clone, Debug)]
pub struct SubgroupPresentation {
    table: CosetTable,
    generators: Vec<SchreierGenerator>,
    lookup: HashMap<(usize, GeneratorId), GeneratorId>,
    presentation: Presentation,
    origins: Vec<RelatorOrigin>,
}

impl SubgroupPresentation {
    pub fn new(table: CosetTable, prefix: &str) -> Result<Self> {
        let generators = schreier_generators(&table, prefix);
        SubgroupPresentation::with_generators(table, generators)
    }

    /// Builds the presentation from explicitly supplied generators, which must
    /// coincide with the Schreier generators of `table` up to naming.
    pub fn with_generators(table: CosetTable, generators: Vec<SchreierGenerator>) -> Result<Self> {
        let mut lookup = HashMap::new();
        for (k, sg) in generators.iter().enumerate() {
            if !table.contains(&sg.expansion) {
                return Err(Error::NotInSubgroup(table.presentation().format_word(&sg.expansion)));
            }
            lookup.insert((sg.coset, sg.parent_generator), GeneratorId(k));
        }
        let alphabet = Alphabet::new(
            generators
                .iter()
                .map(|g| Generator { name: g.name.clone(), meridional: false })
                .collect(),
        )?;
        let mut sub = SubgroupPresentation {
            table,
            generators,
            lookup,
            presentation: Presentation::new(alphabet.clone(), vec![])?,
            origins: vec![],
        };
        let expected = schreier_generators(&sub.table, "");
        if expected.len() != sub.generators.len()
            || expected.iter().zip(&sub.generators).any(|(e, g)| {
                e.coset != g.coset || e.parent_generator != g.parent_generator || e.expansion != g.expansion
            })
        {
            return Err(Error::InconsistentTable(
                "generators differ from the Schreier generators of the table".into(),
            ));
        }

        let mut relators = Vec::new();
        let mut origins = Vec::new();
        let parent = sub.table.presentation().clone();
        for (r_idx, r) in parent.relators().iter().enumerate() {
            for (i, t) in sub.table.transversal().iter().enumerate() {
                let conj = t.multiply(r).multiply(&t.inverse());
                let rewritten = sub.rewrite(&conj)?;
                if rewritten.is_identity() {
                    continue;
                }
                relators.push(rewritten);
                origins.push(RelatorOrigin { relator: r_idx, coset: i });
            }
        }
        sub.presentation = Presentation::new(alphabet, relators)?;
        sub.origins = origins;
        Ok(sub)
    }

    pub fn table(&self) -> &CosetTable {
        &self.table
    }

    pub fn parent(&self) -> &Presentation {
        self.table.presentation()
    }

    /// The subgroup presentation in its own alphabet.
    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn generators(&self) -> &[SchreierGenerator] {
        &self.generators
    }

    pub fn relators(&self) -> &[Word] {
        self.presentation.relators()
    }

    pub fn origins(&self) -> &[RelatorOrigin] {
        &self.origins
    }

    pub fn index(&self) -> usize {
        self.table.index()
    }

    /// Expansions of the subgroup generators as parent words.
    pub fn expansions(&self) -> Vec<Word> {
        self.generators.iter().map(|g| g.expansion.clone()).collect()
    }

    /// Expands a subgroup word into the parent alphabet.
    pub fn expand(&self, w: &Word) -> Result<Word> {
        w.substitute(&self.expansions())
    }

    /// The rewriting map: expresses a parent word lying in the subgroup in the
    /// Schreier generators.
    pub fn rewrite(&self, w: &Word) -> Result<Word> {
        let mut coset = 0;
        let mut raw = Vec::new();
        for (g, e) in w.letters() {
            if e > 0 {
                if let Some(&y) = self.lookup.get(&(coset, g)) {
                    raw.push((y, 1));
                }
                coset = self.table.right_step(coset, g, 1);
            } else {
                let prev = self.table.right_step(coset, g, -1);
                if let Some(&y) = self.lookup.get(&(prev, g)) {
                    raw.push((y, -1));
                }
                coset = prev;
            }
        }
        if coset != 0 {
            return Err(Error::NotInSubgroup(self.parent().format_word(w)));
        }
        Ok(Word::reduce(raw))
    }

    /// Checks that every relator expands back to its originating conjugate.
    pub fn verify_round_trip(&self) -> Result<()> {
        let exps = self.expansions();
        for (r, origin) in self.relators().iter().zip(&self.origins) {
            let t = &self.table.transversal()[origin.coset];
            let target = t
                .multiply(&self.parent().relators()[origin.relator])
                .multiply(&t.inverse());
            if r.substitute(&exps)? != target {
                return Err(Error::InconsistentTable(format!(
                    "relator {} does not expand to its conjugate",
                    self.presentation.format_word(r)
                )));
            }
        }
        for (k, g) in self.generators.iter().enumerate() {
            if self.rewrite(&g.expansion)? != Word::generator(GeneratorId(k)) {
                return Err(Error::InconsistentTable(format!("generator {} does not rewrite to itself", g.name)));
            }
        }
        Ok(())
    }

    /// Whether the subgroup is normal: every generator conjugated by every
    /// parent generator (and its inverse) stays inside.
    pub fn is_normal(&self) -> bool {
        self.parent().alphabet().ids().all(|g| {
            let gw = Word::generator(g);
            self.generators.iter().all(|h| {
                self.table.contains(&h.expansion.conjugate(&gw))
                    && self.table.contains(&h.expansion.conjugate(&gw.inverse()))
            })
        })
    }
}

/// A verified homomorphism from a subgroup onto a free group, given on generators.
#[derive(Clone, Debug)]
pub struct FreeQuotient {
    target: Alphabet,
    images: Vec<Word>,
    certified_surjective: bool,
}

impl FreeQuotient {
    pub fn target(&self) -> &Alphabet {
        &self.target
    }

    pub fn images(&self) -> &[Word] {
        &self.images
    }

    /// Every target generator is the image of some subgroup generator.
    pub fn certified_surjective(&self) -> bool {
        self.certified_surjective
    }

    pub fn apply(&self, w: &Word) -> Result<Word> {
        w.substitute(&self.images)
    }
}

/// Verifies that `images` kills every relator of `sub`.
pub fn quotient_to_free(
    sub: &Presentation,
    target: Alphabet,
    images: Vec<Word>,
) -> Result<FreeQuotient> {
    if images.len() != sub.num_generators() {
        return Err(Error::DimensionMismatch { expected: sub.num_generators(), found: images.len() });
    }
    for w in &images {
        target.validate(w)?;
    }
    for (i, r) in sub.relators().iter().enumerate() {
        let img = r.substitute(&images)?;
        if !img.is_identity() {
            return Err(Error::RelatorNotKilled { relator: i, image: target.format_word(&img) });
        }
    }
    let certified_surjective = target.ids().all(|x| {
        images.iter().any(|w| *w == Word::generator(x) || *w == Word::power_of(x, -1))
    });
    Ok(FreeQuotient { target, images, certified_surjective })
}

/// Schreier generators of a kernel subgroup, as parent words.
pub fn kernel_subgroup_generators(tbl_n: &CosetTable) -> Vec<Word> {
    schreier_generators(tbl_n, "").into_iter().map(|g| g.expansion).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coset::{dihedral_rep, CosetTable};
    use crate::presentation::{two_bridge_sa_form, TwoBridgeParams};

    fn fig8_h() -> SubgroupPresentation {
        let p = two_bridge_sa_form(TwoBridgeParams::new(5, 3).unwrap());
        let rep = dihedral_rep(&p, 5).unwrap();
        SubgroupPresentation::new(CosetTable::stabilizer(&rep, 1).unwrap(), "y").unwrap()
    }

    #[test]
    fn figure_eight_generators() {
        let h = fig8_h();
        let p = h.parent();
        let got: Vec<(String, String)> = h
            .generators()
            .iter()
            .map(|g| (g.name.clone(), p.format_word(&g.expansion)))
            .collect();
        let expected = [
            ("y0", "s"),
            ("y1", "a s a^-4"),
            ("y2", "a^2 s a^-3"),
            ("y3", "a^3 s a^-2"),
            ("y4", "a^4 s a^-1"),
            ("y5", "a^5"),
        ];
        assert_eq!(got.len(), expected.len());
        for ((n, e), (en, ee)) in got.iter().zip(expected) {
            assert_eq!((n.as_str(), e.as_str()), (en, ee));
        }
        // k·|gens| − k + 1
        assert_eq!(h.generators().len(), 5 * 2 - 5 + 1);
    }

    #[test]
    fn figure_eight_relators() {
        let h = fig8_h();
        let sp = h.presentation();
        let got: Vec<String> = h.relators().iter().map(|r| sp.format_word(r)).collect();
        assert_eq!(
            got,
            [
                "y5^-1 y1^-1 y2^2 y1^-1",
                "y0^-1 y1 y3 y2^-1",
                "y4^-1 y5 y0 y5^-1 y4 y3^-1",
                "y3^-1 y4 y0 y4^-1",
                "y2^-1 y3 y1 y5 y0^-1 y5^-1",
            ]
        );
        h.verify_round_trip().unwrap();
    }

    #[test]
    fn rewrite_examples() {
        let h = fig8_h();
        let p = h.parent();
        let sp = h.presentation();
        let s2 = p.parse_word("s^2").unwrap();
        assert_eq!(h.rewrite(&s2).unwrap(), sp.parse_word("y0^2").unwrap());
        let conj = s2.conjugate(&p.parse_word("a").unwrap());
        assert_eq!(h.rewrite(&conj).unwrap(), sp.parse_word("y5^-1 y4 y1 y5").unwrap());
        let conj2 = s2.conjugate(&p.parse_word("a^2").unwrap());
        assert_eq!(h.rewrite(&conj2).unwrap(), sp.parse_word("y5^-1 y3 y2 y5").unwrap());
        assert!(matches!(h.rewrite(&p.parse_word("a").unwrap()), Err(Error::NotInSubgroup(_))));
    }

    #[test]
    fn psi_kills_relators() {
        let h = fig8_h();
        let target = Alphabet::from_names(&["x", "y"], false).unwrap();
        let imgs = |y2: &str| {
            ["1", "x", y2, "1", "y", "1"]
                .iter()
                .map(|t| target.parse_word(t).unwrap())
                .collect::<Vec<_>>()
        };
        let psi = quotient_to_free(h.presentation(), target.clone(), imgs("x")).unwrap();
        assert!(psi.certified_surjective());
        let bad = quotient_to_free(h.presentation(), target.clone(), imgs("x^-1"));
        match bad {
            Err(Error::RelatorNotKilled { relator, image }) => {
                assert_eq!(relator, 0);
                assert_eq!(image, "x^-4");
            }
            other => panic!("unexpected {other:?}"),
        }
        let trivial = quotient_to_free(
            h.presentation(),
            target.clone(),
            vec![Word::identity(); 6],
        )
        .unwrap();
        assert!(!trivial.certified_surjective());
    }

    #[test]
    fn index_one_gives_parent_back() {
        let p = two_bridge_sa_form(TwoBridgeParams::new(5, 3).unwrap());
        let one = crate::coset::Permutation::identity(1);
        let rep = crate::coset::PermRep::new(p.clone(), vec![one.clone(), one]).unwrap();
        let sub = SubgroupPresentation::new(CosetTable::stabilizer(&rep, 1).unwrap(), "g").unwrap();
        assert_eq!(sub.generators().len(), 2);
        assert_eq!(sub.relators(), p.relators());
    }

    #[test]
    fn trefoil_subgroup() {
        let p = two_bridge_sa_form(TwoBridgeParams::new(3, 1).unwrap());
        let rep = dihedral_rep(&p, 3).unwrap();
        let sub = SubgroupPresentation::new(CosetTable::stabilizer(&rep, 1).unwrap(), "y").unwrap();
        assert_eq!(sub.generators().len(), 4);
        assert_eq!(sub.relators().len(), 3);
        sub.verify_round_trip().unwrap();
    }

    #[test]
    fn kernel_generators_figure_eight() {
        let p = two_bridge_sa_form(TwoBridgeParams::new(5, 3).unwrap());
        let rep = dihedral_rep(&p, 5).unwrap();
        let n = CosetTable::kernel(&rep).unwrap();
        let gens = kernel_subgroup_generators(&n);
        assert_eq!(gens.len(), 10 * 2 - 10 + 1);
        assert!(gens.contains(&p.parse_word("s^2").unwrap()));
        assert!(gens.contains(&p.parse_word("a^5").unwrap()));
        assert!(gens.iter().all(|w| rep.in_kernel(w)));
        let sub = SubgroupPresentation::new(n, "z").unwrap();
        assert!(sub.is_normal());
        sub.verify_round_trip().unwrap();
        assert!(!fig8_h().is_normal());
    }

    #[test]
    fn tampered_generators_are_rejected() {
        let h = fig8_h();
        let mut gens = h.generators().to_vec();
        gens[1].expansion = h.parent().parse_word("a s a^-3").unwrap();
        assert!(SubgroupPresentation::with_generators(h.table().clone(), gens).is_err());
    }

    use proptest::prelude::*;
    use crate::words::GeneratorId;

    fn raw_word(gens: usize, max_len: usize) -> impl Strategy<Value = Word> {
        prop::collection::vec((0..gens, -2i64..=2), 0..=max_len)
            .prop_map(|v| Word::reduce(v.into_iter().map(|(g, e)| (GeneratorId(g), e))))
    }

    proptest! {
        #[test]
        fn rewrite_then_expand_is_identity(w in raw_word(2, 20)) {
            let h = fig8_h();
            let tbl = h.table();
            let j = w.letters().fold(0, |i, (g, e)| tbl.right_step(i, g, e));
            let x = w.multiply(&tbl.transversal()[j].inverse());
            prop_assert!(tbl.contains(&x));
            prop_assert_eq!(h.expand(&h.rewrite(&x).unwrap()).unwrap(), x);
        }

        #[test]
        fn rewrite_is_a_homomorphism_on_the_subgroup(u in prop::collection::vec((0usize..6, -2i64..=2), 0..8),
                                                     v in prop::collection::vec((0usize..6, -2i64..=2), 0..8)) {
            let h = fig8_h();
            let u = h.expand(&Word::reduce(u.into_iter().map(|(g, e)| (GeneratorId(g), e)))).unwrap();
            let v = h.expand(&Word::reduce(v.into_iter().map(|(g, e)| (GeneratorId(g), e)))).unwrap();
            let ru = h.rewrite(&u).unwrap();
            let rv = h.rewrite(&v).unwrap();
            prop_assert_eq!(h.rewrite(&u.multiply(&v)).unwrap(), ru.multiply(&rv));
        }
    }
}
