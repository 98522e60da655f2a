//! JSON file formats: ideals, Hopf quadruples, actions with points. The
//! printers emit canonical polynomial text, so loading and re-saving a file
//! is byte-identical.

use crate::centraliser::{ActionSpec, PointList};
use crate::error::{Error, Result};
use crate::field::{parse_field, Coeff};
use crate::hopf::{tensor_ring, HopfQuadruple};
use crate::idealops::Ideal;
use crate::poly::{parse_literal, parse_poly, ring_owned, Polynomial, Ring};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::path::Path;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct IdealFile {
    pub field: String,
    pub vars: Vec<String>,
    pub polys: Vec<String>,
}

impl IdealFile {
    pub fn ring(&self) -> Result<Ring> {
        Ok(ring_owned(parse_field(&self.field)?, self.vars.clone()))
    }

    pub fn ideal(&self) -> Result<Ideal> {
        let ring = self.ring()?;
        let gens = self
            .polys
            .iter()
            .map(|t| parse_poly(t, &ring))
            .collect::<Result<Vec<_>>>()?;
        Ok(Ideal::new(ring, gens))
    }

    pub fn polynomials(&self) -> Result<Vec<Polynomial>> {
        let ring = self.ring()?;
        self.polys.iter().map(|t| parse_poly(t, &ring)).collect()
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct QuadrupleFile {
    pub field: String,
    pub vars: Vec<String>,
    pub relations: Vec<String>,
    pub comul: BTreeMap<String, String>,
    pub antipode: BTreeMap<String, String>,
    pub counit: BTreeMap<String, String>,
}

impl QuadrupleFile {
    pub fn to_quadruple(&self) -> Result<HopfQuadruple> {
        let field = parse_field(&self.field)?;
        let ring = ring_owned(field.clone(), self.vars.clone());
        let t2 = tensor_ring(&ring, 2);
        let relations = self
            .relations
            .iter()
            .map(|t| parse_poly(t, &ring))
            .collect::<Result<Vec<_>>>()?;
        let fetch = |map: &BTreeMap<String, String>, var: &str| -> Result<String> {
            map.get(var)
                .cloned()
                .ok_or_else(|| Error::BadInputFile(format!("missing structure map for `{}`", var)))
        };
        let mut comul = Vec::new();
        let mut antipode = Vec::new();
        let mut counit = Vec::new();
        for v in &self.vars {
            comul.push(parse_poly(&fetch(&self.comul, v)?, &t2)?);
            antipode.push(parse_poly(&fetch(&self.antipode, v)?, &ring)?);
            counit.push(parse_literal(&fetch(&self.counit, v)?, &field)?);
        }
        HopfQuadruple::new(ring, relations, comul, antipode, counit)
    }

    pub fn from_quadruple(h: &HopfQuadruple) -> QuadrupleFile {
        let vars = h.ring().vars.clone();
        let mut comul = BTreeMap::new();
        let mut antipode = BTreeMap::new();
        let mut counit = BTreeMap::new();
        for (i, v) in vars.iter().enumerate() {
            comul.insert(v.clone(), h.comul()[i].to_text());
            antipode.insert(v.clone(), h.antipode()[i].to_text());
            counit.insert(v.clone(), coeff_text(&h.counit()[i]));
        }
        QuadrupleFile {
            field: h.ring().field.to_string(),
            vars,
            relations: h.relations().iter().map(|g| g.to_text()).collect(),
            comul,
            antipode,
            counit,
        }
    }
}

fn coeff_text(c: &Coeff) -> String {
    c.to_literal()
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ActionFile {
    /// Path of the group quadruple file, relative to this file.
    pub group: String,
    pub chart_vars: Vec<String>,
    #[serde(default)]
    pub chart_relations: Vec<String>,
    pub action: BTreeMap<String, String>,
    #[serde(default)]
    pub localizer: Option<String>,
    /// Points as coordinate arrays of field literals.
    #[serde(default)]
    pub points: Vec<Vec<String>>,
}

pub fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(e.to_string()))?;
    serde_json::from_str(&text).map_err(|e| Error::BadInputFile(e.to_string()))
}

pub fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    let mut text =
        serde_json::to_string_pretty(value).map_err(|e| Error::Io(e.to_string()))?;
    text.push('\n');
    std::fs::write(path, text).map_err(|e| Error::Io(e.to_string()))
}

pub fn load_ideal(path: &Path) -> Result<IdealFile> {
    read_json(path)
}

pub fn load_quadruple(path: &Path) -> Result<HopfQuadruple> {
    let file: QuadrupleFile = read_json(path)?;
    file.to_quadruple()
}

/// Load an action file and its referenced group; returns the action plus the
/// point list it declares.
pub fn load_action(path: &Path) -> Result<(ActionSpec, PointList)> {
    let file: ActionFile = read_json(path)?;
    let group_path = path
        .parent()
        .map(|d| d.join(&file.group))
        .unwrap_or_else(|| Path::new(&file.group).to_path_buf());
    let group = load_quadruple(&group_path)?;
    let field = group.ring().field.clone();
    let chart_vars: Vec<&str> = file.chart_vars.iter().map(|s| s.as_str()).collect();
    let chart_relations: Vec<&str> = file.chart_relations.iter().map(|s| s.as_str()).collect();
    let mut action_texts = Vec::new();
    for v in &file.chart_vars {
        let t = file.action.get(v).ok_or_else(|| {
            Error::BadInputFile(format!("missing action polynomial for `{}`", v))
        })?;
        action_texts.push(t.as_str());
    }
    let spec = ActionSpec::new(
        group,
        &chart_vars,
        &chart_relations,
        &action_texts,
        file.localizer.as_deref(),
    )?;
    let mut points = Vec::new();
    for coords in &file.points {
        let mut point = Vec::new();
        for c in coords {
            point.push(parse_literal(c, &field)?);
        }
        point
            .len()
            .eq(&file.chart_vars.len())
            .then_some(())
            .ok_or(Error::PointOffChart)?;
        points.push(point);
    }
    Ok((spec, PointList::new(points)))
}

/// Write the built-in catalog (six groups over Q plus the natural GL2
/// action) into a directory.
pub fn export_catalog(dir: &Path) -> Result<Vec<String>> {
    use crate::field::FieldSpec;
    std::fs::create_dir_all(dir).map_err(|e| Error::Io(e.to_string()))?;
    let mut written = Vec::new();
    for (name, h) in crate::hopf::catalog::standard(FieldSpec::Rationals) {
        let file = QuadrupleFile::from_quadruple(&h);
        let path = dir.join(format!("{}.json", name));
        write_json(&path, &file)?;
        written.push(format!("{}.json", name));
    }
    let natural = ActionFile {
        group: "gl2.json".into(),
        chart_vars: vec!["t1".into(), "t2".into()],
        chart_relations: vec![],
        action: BTreeMap::from([
            ("t1".into(), "a*t1 + b*t2".into()),
            ("t2".into(), "c*t1 + d*t2".into()),
        ]),
        localizer: None,
        points: vec![vec!["1".into(), "0".into()]],
    };
    write_json(&dir.join("gl2_natural.json"), &natural)?;
    written.push("gl2_natural.json".into());
    Ok(written)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::hopf::catalog;

    #[test]
    fn quadruple_file_round_trip() {
        for (_, h) in catalog::standard(FieldSpec::Rationals) {
            let file = QuadrupleFile::from_quadruple(&h);
            let text = serde_json::to_string_pretty(&file).unwrap();
            let parsed: QuadrupleFile = serde_json::from_str(&text).unwrap();
            let h2 = parsed.to_quadruple().unwrap();
            assert_eq!(h, h2);
            // byte-exact second print
            let file2 = QuadrupleFile::from_quadruple(&h2);
            assert_eq!(text, serde_json::to_string_pretty(&file2).unwrap());
        }
    }

    #[test]
    fn ideal_file_parses() {
        let f = IdealFile {
            field: "Fp:5".into(),
            vars: vec!["x".into(), "y".into()],
            polys: vec!["x^2 - y".into()],
        };
        let ideal = f.ideal().unwrap();
        assert_eq!(ideal.generators().len(), 1);
        assert!(IdealFile {
            field: "Fp:6".into(),
            vars: vec![],
            polys: vec![],
        }
        .ideal()
        .is_err());
    }
}
