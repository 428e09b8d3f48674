//! External file formats and the batch workspace.
//!
//! Entities live in a single JSON workspace file keyed by identifier, so
//! homomorphism checks can reference several of them at once. Scalars are
//! decimal strings `"p/q"` (or `"p"` when the denominator is one) with the
//! sign on the numerator. Bracket tables store only `i < j` rows; the
//! antisymmetric completion is implicit. Product tables of pre-Lie algebras
//! store all `(i, j)` rows.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::bialg::{Cobracket, LieBialgebra, MapPair};
use crate::cybe::RMatrix;
use crate::endo::EndoLieAlgebra;
use crate::error::{Error, Result};
use crate::kernel::{LinearMap, Scalar, Tensor2};
use crate::lie::{LieAlgebra, Representation};
use crate::manin::ManinTriple;
use crate::oop_prelie::{OOperator, OOperatorEndo, PreLieAlgebra};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AlgebraDto {
    pub dim: usize,
    #[serde(default)]
    pub brackets: Vec<BracketRow>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BracketRow {
    pub i: usize,
    pub j: usize,
    pub out: Vec<(usize, Scalar)>,
}

impl AlgebraDto {
    pub fn to_algebra(&self) -> Result<LieAlgebra> {
        let mut table = Vec::new();
        for row in &self.brackets {
            for (k, v) in &row.out {
                table.push((row.i, row.j, *k, v.clone()));
            }
        }
        LieAlgebra::from_brackets(self.dim, &table)
    }

    pub fn of_algebra(alg: &LieAlgebra) -> AlgebraDto {
        let n = alg.dim();
        let mut brackets = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let out: Vec<(usize, Scalar)> = (0..n)
                    .filter_map(|k| {
                        let v = alg.c(i, j, k);
                        (!v.is_zero()).then(|| (k, v.clone()))
                    })
                    .collect();
                if !out.is_empty() {
                    brackets.push(BracketRow { i, j, out });
                }
            }
        }
        AlgebraDto { dim: n, brackets }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EndoDto {
    #[serde(flatten)]
    pub algebra: AlgebraDto,
    pub phi: Vec<Vec<Scalar>>,
}

impl EndoDto {
    pub fn to_endo(&self) -> Result<EndoLieAlgebra> {
        let algebra = self.algebra.to_algebra()?;
        let phi = matrix_from_rows(&self.phi)?;
        EndoLieAlgebra::new(algebra, phi)
    }

    pub fn of_endo(endo: &EndoLieAlgebra) -> EndoDto {
        EndoDto {
            algebra: AlgebraDto::of_algebra(endo.algebra()),
            phi: endo.phi().rows_vec(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DeltaRow {
    pub k: usize,
    pub out: Vec<(usize, usize, Scalar)>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BialgebraDto {
    #[serde(flatten)]
    pub algebra: AlgebraDto,
    #[serde(default)]
    pub delta: Vec<DeltaRow>,
}

impl BialgebraDto {
    pub fn to_bialgebra(&self) -> Result<LieBialgebra> {
        let algebra = self.algebra.to_algebra()?;
        let mut entries = Vec::new();
        for row in &self.delta {
            for (i, j, v) in &row.out {
                entries.push((row.k, *i, *j, v.clone()));
            }
        }
        let delta = Cobracket::from_entries(self.algebra.dim, &entries)?;
        LieBialgebra::new(algebra, delta)
    }

    pub fn of_bialgebra(b: &LieBialgebra) -> BialgebraDto {
        let n = b.dim();
        let mut delta = Vec::new();
        for k in 0..n {
            let out: Vec<(usize, usize, Scalar)> = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .filter_map(|(i, j)| {
                    let v = b.delta().get(k, i, j);
                    (!v.is_zero()).then(|| (i, j, v.clone()))
                })
                .collect();
            if !out.is_empty() {
                delta.push(DeltaRow { k, out });
            }
        }
        BialgebraDto {
            algebra: AlgebraDto::of_algebra(b.algebra()),
            delta,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ManinDto {
    pub big: AlgebraDto,
    pub n: usize,
}

impl ManinDto {
    pub fn to_manin(&self) -> Result<ManinTriple> {
        ManinTriple::from_big(self.big.to_algebra()?, self.n)
    }

    pub fn of_manin(mt: &ManinTriple) -> ManinDto {
        ManinDto {
            big: AlgebraDto::of_algebra(mt.big()),
            n: mt.n(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RMatrixDto {
    pub algebra: AlgebraDto,
    pub r: Vec<Vec<Scalar>>,
}

impl RMatrixDto {
    pub fn to_rmatrix(&self) -> Result<RMatrix> {
        let algebra = self.algebra.to_algebra()?;
        let mat = matrix_from_rows(&self.r)?;
        RMatrix::new(algebra, Tensor2::from_matrix(mat))
    }

    pub fn of_rmatrix(rm: &RMatrix) -> RMatrixDto {
        RMatrixDto {
            algebra: AlgebraDto::of_algebra(rm.algebra()),
            r: rm.r().matrix().rows_vec(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RepresentationDto {
    #[serde(rename = "dimV")]
    pub dim_v: usize,
    pub rho: Vec<Vec<Vec<Scalar>>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct OOperatorDto {
    pub algebra: AlgebraDto,
    pub rep: RepresentationDto,
    #[serde(rename = "T")]
    pub t: Vec<Vec<Scalar>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub phi: Option<Vec<Vec<Scalar>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<Vec<Vec<Scalar>>>,
}

impl OOperatorDto {
    pub fn to_ooperator(&self) -> Result<OOperator> {
        let algebra = self.algebra.to_algebra()?;
        let rho = self
            .rep
            .rho
            .iter()
            .map(|m| matrix_from_rows(m))
            .collect::<Result<Vec<_>>>()?;
        let rep = Representation::new(algebra, self.rep.dim_v, rho)?;
        let t = matrix_from_rows(&self.t)?;
        let endo = match (&self.phi, &self.alpha) {
            (Some(phi), Some(alpha)) => Some(OOperatorEndo {
                phi: matrix_from_rows(phi)?,
                alpha: matrix_from_rows(alpha)?,
            }),
            (None, None) => None,
            _ => {
                return Err(Error::InvalidInput(
                    "operator endo data needs both phi and alpha".into(),
                ))
            }
        };
        OOperator::new(rep, t, endo)
    }

    pub fn of_ooperator(op: &OOperator) -> OOperatorDto {
        OOperatorDto {
            algebra: AlgebraDto::of_algebra(op.algebra()),
            rep: RepresentationDto {
                dim_v: op.rep().dim_v(),
                rho: op.rep().maps().iter().map(LinearMap::rows_vec).collect(),
            },
            t: op.t().rows_vec(),
            phi: op.endo().map(|e| e.phi.rows_vec()),
            alpha: op.endo().map(|e| e.alpha.rows_vec()),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PreLieDto {
    pub dim: usize,
    #[serde(default)]
    pub products: Vec<BracketRow>,
}

impl PreLieDto {
    pub fn to_prelie(&self) -> Result<PreLieAlgebra> {
        let mut table = Vec::new();
        for row in &self.products {
            for (k, v) in &row.out {
                table.push((row.i, row.j, *k, v.clone()));
            }
        }
        PreLieAlgebra::from_products(self.dim, &table)
    }

    pub fn of_prelie(alg: &PreLieAlgebra) -> PreLieDto {
        let n = alg.dim();
        let mut products = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let out: Vec<(usize, Scalar)> = (0..n)
                    .filter_map(|k| {
                        let v = alg.p(i, j, k);
                        (!v.is_zero()).then(|| (k, v.clone()))
                    })
                    .collect();
                if !out.is_empty() {
                    products.push(BracketRow { i, j, out });
                }
            }
        }
        PreLieDto { dim: n, products }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MapDto {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<Scalar>>,
}

impl MapDto {
    pub fn to_map(&self) -> Result<LinearMap> {
        let m = matrix_from_rows(&self.entries)?;
        if m.rows() != self.rows || m.cols() != self.cols {
            return Err(Error::dims(
                "map entries",
                format!("{}x{}", self.rows, self.cols),
                format!("{}x{}", m.rows(), m.cols()),
            ));
        }
        Ok(m)
    }

    pub fn of_map(m: &LinearMap) -> MapDto {
        MapDto {
            rows: m.rows(),
            cols: m.cols(),
            entries: m.rows_vec(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MapPairDto {
    pub fwd: MapDto,
    pub bwd: MapDto,
}

impl MapPairDto {
    pub fn of_pair(pair: &MapPair) -> MapPairDto {
        MapPairDto {
            fwd: MapDto::of_map(pair.fwd()),
            bwd: MapDto::of_map(pair.bwd()),
        }
    }
}

fn matrix_from_rows(rows: &[Vec<Scalar>]) -> Result<LinearMap> {
    LinearMap::from_rows(rows.to_vec())
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct WorkspaceDto {
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub algebras: BTreeMap<String, AlgebraDto>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub endos: BTreeMap<String, EndoDto>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub bialgebras: BTreeMap<String, BialgebraDto>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub manin: BTreeMap<String, ManinDto>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub rmatrices: BTreeMap<String, RMatrixDto>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub ooperators: BTreeMap<String, OOperatorDto>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub prelie: BTreeMap<String, PreLieDto>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub maps: BTreeMap<String, MapDto>,
}

/// Fully shape-validated entities from one workspace file. Semantic checks
/// are run by the commands, not at load time.
#[derive(Debug, Clone, Default)]
pub struct Workspace {
    pub algebras: BTreeMap<String, LieAlgebra>,
    pub endos: BTreeMap<String, EndoLieAlgebra>,
    pub bialgebras: BTreeMap<String, LieBialgebra>,
    pub manin: BTreeMap<String, ManinTriple>,
    pub rmatrices: BTreeMap<String, RMatrix>,
    pub ooperators: BTreeMap<String, OOperator>,
    pub prelie: BTreeMap<String, PreLieAlgebra>,
    pub maps: BTreeMap<String, LinearMap>,
}

macro_rules! getter {
    ($fn_name:ident, $field:ident, $ty:ty, $kind:literal) => {
        pub fn $fn_name(&self, name: &str) -> Result<&$ty> {
            self.$field.get(name).ok_or_else(|| Error::UnresolvedRef {
                kind: $kind,
                name: name.to_string(),
            })
        }
    };
}

impl Workspace {
    pub fn from_dto(dto: &WorkspaceDto) -> Result<Workspace> {
        let mut ws = Workspace::default();
        for (name, d) in &dto.algebras {
            ws.algebras.insert(name.clone(), in_entity(name, d.to_algebra())?);
        }
        for (name, d) in &dto.endos {
            ws.endos.insert(name.clone(), in_entity(name, d.to_endo())?);
        }
        for (name, d) in &dto.bialgebras {
            ws.bialgebras.insert(name.clone(), in_entity(name, d.to_bialgebra())?);
        }
        for (name, d) in &dto.manin {
            ws.manin.insert(name.clone(), in_entity(name, d.to_manin())?);
        }
        for (name, d) in &dto.rmatrices {
            ws.rmatrices.insert(name.clone(), in_entity(name, d.to_rmatrix())?);
        }
        for (name, d) in &dto.ooperators {
            ws.ooperators.insert(name.clone(), in_entity(name, d.to_ooperator())?);
        }
        for (name, d) in &dto.prelie {
            ws.prelie.insert(name.clone(), in_entity(name, d.to_prelie())?);
        }
        for (name, d) in &dto.maps {
            ws.maps.insert(name.clone(), in_entity(name, d.to_map())?);
        }
        Ok(ws)
    }

    getter!(algebra, algebras, LieAlgebra, "algebras");
    getter!(endo, endos, EndoLieAlgebra, "endos");
    getter!(bialgebra, bialgebras, LieBialgebra, "bialgebras");
    getter!(manin_triple, manin, ManinTriple, "manin");
    getter!(rmatrix, rmatrices, RMatrix, "rmatrices");
    getter!(ooperator, ooperators, OOperator, "ooperators");
    getter!(prelie_algebra, prelie, PreLieAlgebra, "prelie");
    getter!(map, maps, LinearMap, "maps");
}

fn in_entity<T>(name: &str, r: Result<T>) -> Result<T> {
    r.map_err(|e| Error::InvalidInput(format!("entity `{name}`: {e}")))
}

/// Parse a workspace from JSON text. Syntax errors carry line and column.
pub fn workspace_from_str(text: &str) -> Result<Workspace> {
    let dto: WorkspaceDto = serde_json::from_str(text).map_err(|e| {
        Error::Parse(format!(
            "workspace JSON at line {}, column {}: {e}",
            e.line(),
            e.column()
        ))
    })?;
    Workspace::from_dto(&dto)
}

/// Load a workspace file from disk.
pub fn load_workspace(path: &Path) -> Result<Workspace> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
    workspace_from_str(&text).map_err(|e| match e {
        Error::Parse(msg) => Error::Parse(format!("{}: {msg}", path.display())),
        other => other,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn empty_workspace_loads() {
        let ws = workspace_from_str("{}").unwrap();
        assert!(ws.bialgebras.is_empty());
        assert!(matches!(
            ws.bialgebra("missing"),
            Err(Error::UnresolvedRef { .. })
        ));
    }

    #[test]
    fn bialgebra_round_trips_through_json() {
        let b = catalog::coboundary_fixture();
        let dto = BialgebraDto::of_bialgebra(&b);
        let text = serde_json::to_string(&dto).unwrap();
        let back: BialgebraDto = serde_json::from_str(&text).unwrap();
        assert_eq!(back.to_bialgebra().unwrap(), b);
    }

    #[test]
    fn workspace_with_one_bialgebra() {
        let text = r#"{
            "bialgebras": {
                "fixture": {
                    "dim": 2,
                    "brackets": [{"i": 0, "j": 1, "out": [[1, "1"]]}],
                    "delta": [{"k": 0, "out": [[0, 1, "1"]]}]
                }
            }
        }"#;
        let ws = workspace_from_str(text).unwrap();
        assert_eq!(ws.bialgebra("fixture").unwrap(), &catalog::coboundary_fixture());
    }

    #[test]
    fn zero_denominator_is_a_parse_error() {
        let text = r#"{
            "maps": {"bad": {"rows": 1, "cols": 1, "entries": [["1/0"]]}}
        }"#;
        let err = workspace_from_str(text).unwrap_err();
        assert!(matches!(err, Error::Parse(_)), "{err}");
        assert!(err.to_string().contains("line"));
    }

    #[test]
    fn bracket_rows_with_repeated_or_flipped_indices_are_rejected() {
        let text = r#"{
            "algebras": {"bad": {"dim": 2, "brackets": [{"i": 1, "j": 0, "out": [[1, "1"]]}]}}
        }"#;
        assert!(workspace_from_str(text).is_err());
    }

    #[test]
    fn scalars_serialize_as_fraction_strings() {
        let rm = catalog::sl2_quasitriangular();
        let dto = RMatrixDto::of_rmatrix(&rm);
        let text = serde_json::to_string(&dto).unwrap();
        assert!(text.contains("\"1/4\""));
        let back: RMatrixDto = serde_json::from_str(&text).unwrap();
        assert_eq!(back.to_rmatrix().unwrap().r(), rm.r());
    }

    #[test]
    fn manin_round_trips_with_recomputed_restrictions() {
        let b = catalog::coboundary_fixture();
        let mt = crate::manin::manin_from_bialgebra(&b).unwrap();
        let dto = ManinDto::of_manin(&mt);
        let text = serde_json::to_string(&dto).unwrap();
        let back: ManinDto = serde_json::from_str(&text).unwrap();
        let loaded = back.to_manin().unwrap();
        assert_eq!(loaded.big(), mt.big());
        assert_eq!(loaded.g_star_alg(), mt.g_star_alg());
    }

    #[test]
    fn ooperator_with_endo_round_trips() {
        let fix = catalog::prelie2();
        let base = crate::oop_prelie::functor_f_obj(&fix).unwrap();
        let phi = LinearMap::identity(2);
        let op = OOperator::new(
            base.rep().clone(),
            base.t().clone(),
            Some(OOperatorEndo {
                phi: phi.clone(),
                alpha: phi,
            }),
        )
        .unwrap();
        let dto = OOperatorDto::of_ooperator(&op);
        let text = serde_json::to_string(&dto).unwrap();
        let back: OOperatorDto = serde_json::from_str(&text).unwrap();
        assert_eq!(back.to_ooperator().unwrap(), op);
    }
}
