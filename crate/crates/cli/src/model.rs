//! Model files: a JSON description of R = F_p[x]/I together with named
//! modules and named candidate systems of parameters.

use std::collections::BTreeMap;

use frobcheck_core::module::validate_presentation;
use frobcheck_core::parse::parse_polynomial;
use frobcheck_core::{
    invariants, Budget, Error, Matrix, PolyRing, Polynomial, PresentedModule, PrimeField, Result,
    RingFlags, RingModel,
};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FlagsFile {
    #[serde(default)]
    pub domain: bool,
    #[serde(default)]
    pub generically_gorenstein: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cohen_macaulay: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleFile {
    /// Rows of the relation matrix; `[[], []]` is a free module of rank 2.
    pub matrix: Vec<Vec<String>>,
    /// Declared rank, needed outside domains.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rank: Option<usize>,
}

/// The file as written; field order here is the canonical order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelFile {
    pub characteristic: u64,
    pub variables: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<u32>>,
    #[serde(default)]
    pub ideal: Vec<String>,
    #[serde(default)]
    pub flags: FlagsFile,
    #[serde(default)]
    pub modules: BTreeMap<String, ModuleFile>,
    #[serde(default)]
    pub sops: BTreeMap<String, Vec<String>>,
}

/// A named module with its optional declared rank.
#[derive(Debug, Clone, PartialEq)]
pub struct NamedModule {
    pub module: PresentedModule,
    pub rank: Option<usize>,
}

/// A validated model.
#[derive(Debug, Clone)]
pub struct Model {
    pub ring: RingModel,
    pub modules: BTreeMap<String, NamedModule>,
    pub sops: BTreeMap<String, Vec<Polynomial>>,
    canonical: String,
}

fn located(e: Error, place: &str) -> Error {
    match e {
        Error::Parse {
            line,
            column,
            message,
        } => Error::Parse {
            line,
            column,
            message: format!("{place}: {message}"),
        },
        Error::Argument(m) => Error::Argument(format!("{place}: {m}")),
        other => other,
    }
}

fn parse_in(poly: &PolyRing, s: &str, place: &str) -> Result<Polynomial> {
    parse_polynomial(poly, s).map_err(|e| located(e, place))
}

impl Model {
    pub fn from_json(text: &str) -> Result<Model> {
        let file: ModelFile = serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
        Model::from_file(&file)
    }

    pub fn from_file(file: &ModelFile) -> Result<Model> {
        let weights = file
            .weights
            .clone()
            .unwrap_or_else(|| vec![1; file.variables.len()]);
        let poly = PolyRing::new(
            PrimeField::new(file.characteristic)?,
            file.variables.clone(),
            weights,
        )?;
        let mut gens = Vec::with_capacity(file.ideal.len());
        for (k, s) in file.ideal.iter().enumerate() {
            gens.push(parse_in(&poly, s, &format!("ideal[{k}]"))?);
        }
        let flags = RingFlags {
            is_domain: file.flags.domain,
            generically_gorenstein: file.flags.generically_gorenstein || file.flags.domain,
            expected_cm: file.flags.cohen_macaulay,
        };
        let ring = RingModel::new(poly.clone(), gens.clone(), flags)
            .map_err(|e| located(e, "ideal"))?
            .with_budget(Budget::new(frobcheck_core::Limits::from_env()?));

        let mut modules = BTreeMap::new();
        for (name, m) in &file.modules {
            let place = format!("modules.{name}");
            let width = m.matrix.first().map_or(0, |r| r.len());
            let mut rows = Vec::with_capacity(m.matrix.len());
            for (i, row) in m.matrix.iter().enumerate() {
                if row.len() != width {
                    return Err(Error::argument(format!(
                        "{place}: row {i} has {} entries, expected {width}",
                        row.len()
                    )));
                }
                let mut out = Vec::with_capacity(width);
                for (j, s) in row.iter().enumerate() {
                    out.push(ring.reduce(&parse_in(
                        &poly,
                        s,
                        &format!("{place}.matrix[{i}][{j}]"),
                    )?)?);
                }
                rows.push(out);
            }
            let matrix = if rows.is_empty() {
                Matrix::zero(0, 0)
            } else {
                Matrix::from_rows(rows)?
            };
            validate_presentation(&ring, &matrix).map_err(|e| located(e, &place))?;
            modules.insert(
                name.clone(),
                NamedModule {
                    module: PresentedModule::new(&ring, matrix)?,
                    rank: m.rank,
                },
            );
        }

        let mut sops = BTreeMap::new();
        for (name, xs) in &file.sops {
            let mut els = Vec::with_capacity(xs.len());
            for (k, s) in xs.iter().enumerate() {
                let f = ring.reduce(&parse_in(&poly, s, &format!("sops.{name}[{k}]"))?)?;
                frobcheck_core::ring::validate_local_generator(&poly, &f)
                    .map_err(|e| located(e, &format!("sops.{name}[{k}]")))?;
                els.push(f);
            }
            sops.insert(name.clone(), els);
        }

        let mut model = Model {
            ring,
            modules,
            sops,
            canonical: String::new(),
        };
        model.canonical = render_file(&model.to_file(file))?;
        Ok(model)
    }

    /// Canonical form: explicit weights, polynomials in canonical rendering.
    fn to_file(&self, original: &ModelFile) -> ModelFile {
        let r = &self.ring;
        ModelFile {
            characteristic: r.characteristic() as u64,
            variables: r.poly().names().to_vec(),
            weights: Some(r.poly().weights().to_vec()),
            ideal: r.ideal().iter().map(|g| r.render(g)).collect(),
            flags: original.flags.clone(),
            modules: self
                .modules
                .iter()
                .map(|(k, m)| {
                    (
                        k.clone(),
                        ModuleFile {
                            matrix: m.module.render(),
                            rank: m.rank,
                        },
                    )
                })
                .collect(),
            sops: self
                .sops
                .iter()
                .map(|(k, xs)| (k.clone(), xs.iter().map(|x| r.render(x)).collect()))
                .collect(),
        }
    }

    /// Canonical JSON rendering; parsing it yields an identical model.
    pub fn render(&self) -> &str {
        &self.canonical
    }

    /// SHA-256 of the canonical rendering.
    pub fn digest(&self) -> String {
        hex::encode(Sha256::digest(self.canonical.as_bytes()))
    }

    /// Checks the Cohen-Macaulay assertion, if any, against the computed depth.
    pub fn verify_assertions(&self) -> Result<()> {
        if let Some(expected) = self.ring.flags().expected_cm {
            let actual = invariants::is_cohen_macaulay(&self.ring)?;
            if actual != expected {
                return Err(Error::precondition(format!(
                    "the model asserts cohen_macaulay = {expected} but depth and dimension give {actual}"
                )));
            }
        }
        Ok(())
    }

    /// A declared module, or one of the built-ins `R`, `k`, `omega`.
    pub fn module(&self, name: &str) -> Result<NamedModule> {
        if let Some(m) = self.modules.get(name) {
            return Ok(m.clone());
        }
        let ring = &self.ring;
        match name {
            "R" => Ok(NamedModule {
                module: PresentedModule::free(ring, 1),
                rank: Some(1),
            }),
            "k" => Ok(NamedModule {
                module: PresentedModule::residue_field(ring),
                rank: (invariants::ring_dimension(ring)? > 0).then_some(0),
            }),
            "omega" => Ok(NamedModule {
                module: invariants::canonical_module(ring)?,
                rank: ring.flags().generically_gorenstein.then_some(1),
            }),
            _ => Err(Error::argument(format!(
                "unknown module {name:?}; declared: {:?}, built-in: [\"R\", \"k\", \"omega\"]",
                self.modules.keys().collect::<Vec<_>>()
            ))),
        }
    }

    pub fn sop(&self, name: &str) -> Result<&[Polynomial]> {
        self.sops.get(name).map(|v| v.as_slice()).ok_or_else(|| {
            Error::argument(format!(
                "unknown s.o.p. {name:?}; declared: {:?}",
                self.sops.keys().collect::<Vec<_>>()
            ))
        })
    }
}

fn render_file(file: &ModelFile) -> Result<String> {
    let mut s = serde_json::to_string_pretty(file).map_err(|e| Error::Internal(e.to_string()))?;
    s.push('\n');
    Ok(s)
}
