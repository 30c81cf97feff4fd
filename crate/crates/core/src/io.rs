//! JSON file formats. Words are stored in the whitespace token syntax.

use std::collections::BTreeMap;
use std::path::Path;

use num_complex::Complex64;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::coset::{CosetTable, PermRep, Permutation, SubgroupKind};
use crate::error::{Error, Result};
use crate::linalg::CMat;
use crate::presentation::Presentation;
use crate::rep::MatrixRep;
use crate::schreier::{quotient_to_free, FreeQuotient, SubgroupPresentation};
use crate::words::{Alphabet, Generator};

pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T> {
    Ok(serde_json::from_str(&std::fs::read_to_string(path)?)?)
}

pub fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    std::fs::write(path, text)?;
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorEntry {
    pub name: String,
    #[serde(default)]
    pub meridional: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationFile {
    pub generators: Vec<GeneratorEntry>,
    pub relators: Vec<String>,
}

impl PresentationFile {
    pub fn from_presentation(p: &Presentation) -> Self {
        PresentationFile {
            generators: p
                .alphabet()
                .generators()
                .iter()
                .map(|g| GeneratorEntry { name: g.name.clone(), meridional: g.meridional })
                .collect(),
            relators: p.relators().iter().map(|r| p.format_word(r)).collect(),
        }
    }

    pub fn to_presentation(&self) -> Result<Presentation> {
        let alphabet = Alphabet::new(
            self.generators
                .iter()
                .map(|g| Generator { name: g.name.clone(), meridional: g.meridional })
                .collect(),
        )?;
        let rel: Vec<&str> = self.relators.iter().map(String::as_str).collect();
        Presentation::parse(alphabet, &rel)
    }
}

/// Permutation images in 1-based cycle notation, keyed by generator name.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PermRepFile {
    pub degree: usize,
    pub images: BTreeMap<String, String>,
}

impl PermRepFile {
    pub fn from_perm_rep(rep: &PermRep) -> Self {
        let al = rep.presentation().alphabet();
        PermRepFile {
            degree: rep.degree(),
            images: al.ids().map(|g| (al.name(g).to_string(), rep.image(g).to_string())).collect(),
        }
    }

    pub fn to_perm_rep(&self, presentation: &Presentation) -> Result<PermRep> {
        let al = presentation.alphabet();
        if self.images.len() != al.len() {
            return Err(Error::DimensionMismatch { expected: al.len(), found: self.images.len() });
        }
        let images = al
            .ids()
            .map(|g| {
                let text = self
                    .images
                    .get(al.name(g))
                    .ok_or_else(|| Error::MissingImage(al.name(g).to_string()))?;
                Permutation::parse_cycles(self.degree, text)
            })
            .collect::<Result<Vec<_>>>()?;
        PermRep::new(presentation.clone(), images)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum SubgroupSpec {
    Stabilizer { point: usize },
    Kernel,
}

impl From<SubgroupKind> for SubgroupSpec {
    fn from(k: SubgroupKind) -> Self {
        match k {
            SubgroupKind::Stabilizer(point) => SubgroupSpec::Stabilizer { point },
            SubgroupKind::Kernel => SubgroupSpec::Kernel,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchreierEntry {
    pub name: String,
    /// 0-based coset index.
    pub coset: usize,
    pub parent_generator: String,
    pub expansion: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubgroupFile {
    pub parent: PresentationFile,
    pub permrep: PermRepFile,
    pub subgroup: SubgroupSpec,
    pub transversal: Vec<String>,
    pub generators: Vec<SchreierEntry>,
    pub relators: Vec<String>,
}

impl SubgroupFile {
    pub fn from_subgroup(sub: &SubgroupPresentation) -> Self {
        let parent = sub.parent();
        let pal = parent.alphabet();
        SubgroupFile {
            parent: PresentationFile::from_presentation(parent),
            permrep: PermRepFile::from_perm_rep(sub.table().perm_rep()),
            subgroup: sub.table().kind().into(),
            transversal: sub.table().transversal().iter().map(|w| parent.format_word(w)).collect(),
            generators: sub
                .generators()
                .iter()
                .map(|g| SchreierEntry {
                    name: g.name.clone(),
                    coset: g.coset,
                    parent_generator: pal.name(g.parent_generator).to_string(),
                    expansion: parent.format_word(&g.expansion),
                })
                .collect(),
            relators: sub.relators().iter().map(|r| sub.presentation().format_word(r)).collect(),
        }
    }

    /// Rebuilds the subgroup from the parent and permutation data and checks
    /// that every stored field agrees with the recomputation.
    pub fn load(&self) -> Result<SubgroupPresentation> {
        let parent = self.parent.to_presentation()?;
        let rep = self.permrep.to_perm_rep(&parent)?;
        let table = match self.subgroup {
            SubgroupSpec::Stabilizer { point } => CosetTable::stabilizer(&rep, point)?,
            SubgroupSpec::Kernel => CosetTable::kernel(&rep)?,
        };
        let prefix = self
            .generators
            .first()
            .map(|g| g.name.trim_end_matches(|c: char| c.is_ascii_digit()).to_string())
            .unwrap_or_else(|| "y".into());
        let sub = SubgroupPresentation::new(table, &prefix)?;
        sub.verify_round_trip()?;
        let fresh = SubgroupFile::from_subgroup(&sub);
        for (field, same) in [
            ("transversal", fresh.transversal == self.transversal),
            ("generators", fresh.generators == self.generators),
            ("relators", fresh.relators == self.relators),
        ] {
            if !same {
                return Err(Error::InconsistentTable(format!("stored {field} differ from the recomputation")));
            }
        }
        Ok(sub)
    }
}

/// A homomorphism from a subgroup onto a free group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientFile {
    pub target: Vec<String>,
    pub images: BTreeMap<String, String>,
}

impl QuotientFile {
    pub fn from_quotient(sub: &Presentation, q: &FreeQuotient) -> Self {
        let al = sub.alphabet();
        QuotientFile {
            target: q.target().generators().iter().map(|g| g.name.clone()).collect(),
            images: al
                .ids()
                .map(|g| (al.name(g).to_string(), q.target().format_word(&q.images()[g.0])))
                .collect(),
        }
    }

    pub fn load(&self, sub: &Presentation) -> Result<FreeQuotient> {
        let names: Vec<&str> = self.target.iter().map(String::as_str).collect();
        let target = Alphabet::from_names(&names, false)?;
        let al = sub.alphabet();
        let images = al
            .ids()
            .map(|g| {
                let text = self.images.get(al.name(g)).ok_or_else(|| Error::MissingImage(al.name(g).into()))?;
                target.parse_word(text)
            })
            .collect::<Result<Vec<_>>>()?;
        if self.images.len() != al.len() {
            return Err(Error::DimensionMismatch { expected: al.len(), found: self.images.len() });
        }
        quotient_to_free(sub, target, images)
    }
}

/// Complex matrix as rows of `[re, im]` pairs.
pub type MatrixData = Vec<Vec<[f64; 2]>>;

pub fn matrix_to_data(m: &CMat) -> MatrixData {
    (0..m.nrows())
        .map(|i| (0..m.ncols()).map(|j| [m[(i, j)].re, m[(i, j)].im]).collect())
        .collect()
}

pub fn matrix_from_data(d: &MatrixData) -> Result<CMat> {
    let n = d.len();
    if d.iter().any(|row| row.len() != n) {
        return Err(Error::Invalid("matrix rows must form a square".into()));
    }
    Ok(CMat::from_fn(n, n, |i, j| Complex64::new(d[i][j][0], d[i][j][1])))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MatrixRepFile {
    pub presentation: PresentationFile,
    pub n: usize,
    pub images: BTreeMap<String, MatrixData>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tol: Option<f64>,
}

impl MatrixRepFile {
    pub fn from_rep(rep: &MatrixRep, with_tol: bool) -> Self {
        let al = rep.alphabet();
        MatrixRepFile {
            presentation: PresentationFile::from_presentation(rep.presentation()),
            n: rep.n(),
            images: al.ids().map(|g| (al.name(g).to_string(), matrix_to_data(rep.image(g)))).collect(),
            tol: with_tol.then(|| rep.tol()),
        }
    }

    fn images(&self, p: &Presentation) -> Result<Vec<CMat>> {
        let al = p.alphabet();
        if self.images.len() != al.len() {
            return Err(Error::DimensionMismatch { expected: al.len(), found: self.images.len() });
        }
        al.ids()
            .map(|g| {
                let d = self.images.get(al.name(g)).ok_or_else(|| Error::MissingImage(al.name(g).into()))?;
                let m = matrix_from_data(d)?;
                if m.nrows() != self.n {
                    return Err(Error::DimensionMismatch { expected: self.n, found: m.nrows() });
                }
                Ok(m)
            })
            .collect()
    }

    /// Verified load.
    pub fn load(&self) -> Result<MatrixRep> {
        let p = self.presentation.to_presentation()?;
        let images = self.images(&p)?;
        MatrixRep::new(p, images, self.tol)
    }

    /// Load without checking the relations.
    pub fn load_unchecked(&self) -> Result<MatrixRep> {
        let p = self.presentation.to_presentation()?;
        let images = self.images(&p)?;
        MatrixRep::new_unchecked(p, images, self.tol)
    }
}
