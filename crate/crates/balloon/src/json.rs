//! JSON interchange for instances, layouts and drawings.
//!
//! Spoke directions are written as integer units of `2π / n_spokes`, so they
//! survive a round trip exactly. Distances use the shortest decimal form
//! that parses back to the same `f64`.

use balloon_core::angles::units_to_radians;
use balloon_core::tree::{DrawingStats, ExclusiveDisk};
use balloon_core::{Drawing, FreeSpokes, Layer, LayerKind, Layout, Placement, Vec2};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Instance {
    pub radii: Vec<f64>,
    #[serde(default)]
    pub free_spokes: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub metadata: Option<serde_json::Value>,
}

impl Instance {
    pub fn variant(&self) -> Result<FreeSpokes> {
        FreeSpokes::from_count(self.free_spokes)
            .ok_or_else(|| CliError::Schema(format!("free_spokes must be 0, 1 or 2, got {}", self.free_spokes)))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PlacementDoc {
    balloon: usize,
    spoke: usize,
    units: usize,
    center_distance: f64,
    round: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    wedge_opening: Option<f64>,
    #[serde(default)]
    compacted: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
enum KindDoc {
    Contact,
    Wedge,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct LayerDoc {
    round: usize,
    kind: KindDoc,
    spokes: usize,
    safe_before: f64,
    width: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct AngleDoc {
    units: usize,
    n_base: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct LayoutDoc {
    kind: String,
    n_spokes: usize,
    free_count: usize,
    radii: Vec<f64>,
    order: Vec<usize>,
    placements: Vec<PlacementDoc>,
    free_spokes: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    free_angle: Option<AngleDoc>,
    layers: Vec<LayerDoc>,
    covering_radius: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DiskDoc {
    node: usize,
    radius: f64,
    sum_x: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct StatsDoc {
    covering_radius: f64,
    min_edge_length: Option<f64>,
    min_resolution_slack: Option<f64>,
    max_path_ratio: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DrawingDoc {
    kind: String,
    parent: Vec<Option<usize>>,
    positions: Vec<[f64; 2]>,
    exclusive: Vec<DiskDoc>,
    stats: StatsDoc,
}

/// A parsed layout or drawing file.
#[derive(Debug, Clone, PartialEq)]
pub enum Document {
    Layout(Layout),
    Drawing(Drawing),
}

const LAYOUT: &str = "layout";
const DRAWING: &str = "drawing";

fn layout_doc(l: &Layout) -> LayoutDoc {
    let free_angle = match l.free_spokes.as_slice() {
        [a, b] => {
            let d = a.abs_diff(*b);
            Some(AngleDoc { units: d.min(l.n_spokes - d), n_base: l.n_spokes })
        }
        _ => None,
    };
    LayoutDoc {
        kind: LAYOUT.into(),
        n_spokes: l.n_spokes,
        free_count: l.variant.count(),
        radii: l.radii.clone(),
        order: l.order.clone(),
        placements: l
            .placements
            .iter()
            .map(|p| PlacementDoc {
                balloon: p.balloon,
                spoke: p.spoke,
                units: p.units,
                center_distance: p.center_distance,
                round: p.round,
                wedge_opening: p.wedge_opening,
                compacted: p.compacted,
            })
            .collect(),
        free_spokes: l.free_spokes.clone(),
        free_angle,
        layers: l
            .layers
            .iter()
            .map(|x| LayerDoc {
                round: x.round,
                kind: match x.kind {
                    LayerKind::Contact => KindDoc::Contact,
                    LayerKind::Wedge => KindDoc::Wedge,
                },
                spokes: x.spokes,
                safe_before: x.safe_before,
                width: x.width,
            })
            .collect(),
        covering_radius: l.covering_radius,
    }
}

fn layout_from_doc(d: LayoutDoc) -> Result<Layout> {
    let variant = FreeSpokes::from_count(d.free_count)
        .ok_or_else(|| CliError::Schema(format!("free_count must be 0, 1 or 2, got {}", d.free_count)))?;
    let free_angle = match d.free_angle {
        Some(a) if a.n_base != d.n_spokes => {
            return Err(CliError::Schema("free_angle.n_base differs from n_spokes".into()))
        }
        Some(a) => Some(units_to_radians(a.units, a.n_base)),
        None => None,
    };
    Ok(Layout {
        n_spokes: d.n_spokes,
        variant,
        radii: d.radii,
        order: d.order,
        placements: d
            .placements
            .into_iter()
            .map(|p| Placement {
                balloon: p.balloon,
                spoke: p.spoke,
                units: p.units,
                center_distance: p.center_distance,
                round: p.round,
                wedge_opening: p.wedge_opening,
                compacted: p.compacted,
            })
            .collect(),
        free_spokes: d.free_spokes,
        free_angle,
        layers: d
            .layers
            .into_iter()
            .map(|x| Layer {
                round: x.round,
                kind: match x.kind {
                    KindDoc::Contact => LayerKind::Contact,
                    KindDoc::Wedge => LayerKind::Wedge,
                },
                spokes: x.spokes,
                safe_before: x.safe_before,
                width: x.width,
            })
            .collect(),
        covering_radius: d.covering_radius,
    })
}

fn drawing_doc(d: &Drawing) -> DrawingDoc {
    DrawingDoc {
        kind: DRAWING.into(),
        parent: d.parent.clone(),
        positions: d.positions.iter().map(|p| [p.x, p.y]).collect(),
        exclusive: d.exclusive.iter().map(|e| DiskDoc { node: e.node, radius: e.radius, sum_x: e.sum_x }).collect(),
        stats: StatsDoc {
            covering_radius: d.stats.covering_radius,
            min_edge_length: d.stats.min_edge_length,
            min_resolution_slack: d.stats.min_resolution_slack,
            max_path_ratio: d.stats.max_path_ratio,
        },
    }
}

fn drawing_from_doc(d: DrawingDoc) -> Drawing {
    Drawing {
        parent: d.parent,
        positions: d.positions.into_iter().map(|[x, y]| Vec2::new(x, y)).collect(),
        exclusive: d.exclusive.into_iter().map(|e| ExclusiveDisk { node: e.node, radius: e.radius, sum_x: e.sum_x }).collect(),
        stats: DrawingStats {
            covering_radius: d.stats.covering_radius,
            min_edge_length: d.stats.min_edge_length,
            min_resolution_slack: d.stats.min_resolution_slack,
            max_path_ratio: d.stats.max_path_ratio,
        },
    }
}

fn pretty<T: Serialize>(value: &T) -> Vec<u8> {
    let mut out = serde_json::to_vec_pretty(value).expect("documents always serialize");
    out.push(b'\n');
    out
}

pub fn emit_layout(l: &Layout) -> Vec<u8> {
    pretty(&layout_doc(l))
}

pub fn emit_drawing(d: &Drawing) -> Vec<u8> {
    pretty(&drawing_doc(d))
}

pub fn emit_instance(i: &Instance) -> Vec<u8> {
    pretty(i)
}

pub fn parse_instance(bytes: &[u8]) -> Result<Instance> {
    let inst: Instance = serde_json::from_slice(bytes)?;
    if inst.radii.iter().any(|r| *r <= 0.0 || !r.is_finite()) {
        return Err(CliError::Schema("radii must be positive and finite".into()));
    }
    inst.variant()?;
    Ok(inst)
}

pub fn parse_document(bytes: &[u8]) -> Result<Document> {
    #[derive(Deserialize)]
    struct Kind {
        kind: String,
    }
    let Kind { kind } = serde_json::from_slice(bytes)?;
    match kind.as_str() {
        LAYOUT => Ok(Document::Layout(layout_from_doc(serde_json::from_slice(bytes)?)?)),
        DRAWING => Ok(Document::Drawing(drawing_from_doc(serde_json::from_slice(bytes)?))),
        other => Err(CliError::Schema(format!("unknown document kind {other:?}"))),
    }
}

pub fn parse_layout(bytes: &[u8]) -> Result<Layout> {
    match parse_document(bytes)? {
        Document::Layout(l) => Ok(l),
        Document::Drawing(_) => Err(CliError::Schema("expected a layout, found a drawing".into())),
    }
}

pub fn parse_drawing(bytes: &[u8]) -> Result<Drawing> {
    match parse_document(bytes)? {
        Document::Drawing(d) => Ok(d),
        Document::Layout(_) => Err(CliError::Schema("expected a drawing, found a layout".into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use balloon_core::{draw_tree, greedy_balloon, greedy_two_free, RootedTree};

    #[test]
    fn layout_round_trip() {
        for l in [
            greedy_balloon(&[0.5, 0.5]).unwrap(),
            greedy_two_free(&[0.1, 0.7, 0.3, 0.123_456_789_012_345_67, 2.0]).unwrap(),
        ] {
            let back = parse_layout(&emit_layout(&l)).unwrap();
            assert_eq!(back, l);
            for (p, q) in back.placements.iter().zip(&l.placements) {
                assert_eq!(p.units, q.units);
                assert_eq!(p.center_distance.to_bits(), q.center_distance.to_bits());
            }
        }
    }

    #[test]
    fn drawing_round_trip() {
        let d = draw_tree(&RootedTree::complete(3, 2).unwrap()).unwrap();
        assert_eq!(parse_drawing(&emit_drawing(&d)).unwrap(), d);
    }

    #[test]
    fn missing_field_is_named() {
        let err = parse_instance(br#"{"free_spokes": 1}"#).unwrap_err().to_string();
        assert!(err.contains("radii"), "{err}");
        assert!(err.contains("line 1"), "{err}");
        let err = parse_document(br#"{"kind": "layout", "n_spokes": 2}"#).unwrap_err().to_string();
        assert!(err.contains("free_count"), "{err}");
    }

    #[test]
    fn bad_instances() {
        assert!(parse_instance(br#"{"radii": [1, -1]}"#).is_err());
        assert!(parse_instance(br#"{"radii": [1], "free_spokes": 3}"#).is_err());
        assert!(parse_document(br#"{"kind": "poem"}"#).is_err());
        let inst = parse_instance(br#"{"radii": [0.25, 1e-3], "seed": 7}"#).unwrap();
        assert_eq!(inst.free_spokes, 0);
        assert_eq!(parse_instance(&emit_instance(&inst)).unwrap(), inst);
    }
}
