//! One canonical JSON schema family with a `type` discriminator, so
//! every fixture and artifact goes through a single parser.

use serde::{Deserialize, Serialize};

use crate::embed::Embedding;
use crate::graphs::{Coloring, Graph};
use crate::hypergraphs::Hypergraph;
use crate::instance::{Assignment, PackingInstance};
use crate::labelcover::{LabelCover, Labeling};
use crate::reduce::GapCertificate;
use crate::setsys::SetSystem;
use crate::Error;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Document {
    SetSystem(SetSystem),
    Graph(Graph),
    Hypergraph(Hypergraph),
    LabelCover(LabelCover),
    PackingInstance(PackingInstance),
    Embedding(Embedding),
    Assignment { part_of: Vec<usize> },
    Coloring(Coloring),
    Labeling(Labeling),
    GapCertificate(GapCertificate),
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::SetSystem(_) => "set_system",
            Document::Graph(_) => "graph",
            Document::Hypergraph(_) => "hypergraph",
            Document::LabelCover(_) => "label_cover",
            Document::PackingInstance(_) => "packing_instance",
            Document::Embedding(_) => "embedding",
            Document::Assignment { .. } => "assignment",
            Document::Coloring(_) => "coloring",
            Document::Labeling(_) => "labeling",
            Document::GapCertificate(_) => "gap_certificate",
        }
    }

    /// Serde derives accept any well-typed fields; constructor invariants
    /// (index ranges, sortedness, unit-interval coordinates) are re-imposed
    /// here so a parsed document is as trustworthy as a built one.
    pub fn validate(&self) -> Result<(), Error> {
        match self {
            Document::SetSystem(s) => {
                SetSystem::new(s.universe, s.sets.clone())?;
            }
            Document::Graph(g) => {
                Graph::new(g.n, g.edges.clone())?;
            }
            Document::Hypergraph(h) => {
                Hypergraph::new(h.n, h.edges.clone())?;
            }
            Document::LabelCover(lc) => {
                LabelCover::new(
                    lc.left,
                    lc.right,
                    lc.sigma_left,
                    lc.sigma_right,
                    lc.edges.clone(),
                )?;
            }
            Document::PackingInstance(inst) => {
                for job in &inst.jobs {
                    crate::instance::VectorJob::new(job.coords.clone())?;
                }
                PackingInstance::new(inst.kind, inst.dim, inst.machines, inst.jobs.clone())?;
            }
            Document::Embedding(emb) => emb.validate_range()?,
            Document::Assignment { .. }
            | Document::Coloring(_)
            | Document::Labeling(_)
            | Document::GapCertificate(_) => {}
        }
        Ok(())
    }
}

pub fn parse(text: &str) -> Result<Document, Error> {
    let doc: Document =
        serde_json::from_str(text).map_err(|e| Error::Schema(e.to_string()))?;
    doc.validate()?;
    Ok(doc)
}

/// Canonical rendering: pretty JSON with a trailing newline.
pub fn serialize(doc: &Document) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("document serialization");
    s.push('\n');
    s
}

impl From<Assignment> for Document {
    fn from(a: Assignment) -> Self {
        Document::Assignment { part_of: a.part_of }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance::{ProblemKind, VectorJob};
    use crate::rational::Rational;

    fn roundtrip(doc: Document) {
        let text = serialize(&doc);
        let back = parse(&text).unwrap();
        assert_eq!(doc, back);
        // canonical form is a fixed point
        assert_eq!(text, serialize(&back));
    }

    #[test]
    fn all_kinds_roundtrip() {
        roundtrip(Document::SetSystem(
            SetSystem::new(4, vec![vec![0, 1], vec![2], vec![1, 3]]).unwrap(),
        ));
        roundtrip(Document::Graph(Graph::cycle(5)));
        roundtrip(Document::Hypergraph(
            Hypergraph::new(4, vec![vec![0, 1, 2], vec![1, 2, 3]]).unwrap(),
        ));
        roundtrip(Document::LabelCover(
            crate::labelcover::LabelCover::new(
                1,
                1,
                2,
                2,
                vec![crate::labelcover::LcEdge {
                    u: 0,
                    v: 0,
                    pi: vec![0, 1],
                }],
            )
            .unwrap(),
        ));
        roundtrip(Document::PackingInstance(
            PackingInstance::new(
                ProblemKind::Vs,
                2,
                Some(3),
                vec![
                    VectorJob::new(vec![Rational::new(1, 2), Rational::zero()]).unwrap(),
                    VectorJob::from_bits(&[false, true]),
                ],
            )
            .unwrap(),
        ));
        roundtrip(Document::Embedding(Embedding {
            dim: 2,
            map: vec![
                vec![Rational::one(), Rational::new(1, 3)],
                vec![Rational::zero(), Rational::new(1, 3)],
            ],
        }));
        roundtrip(Document::Assignment {
            part_of: vec![0, 1, 0],
        });
        roundtrip(Document::Coloring(Coloring {
            color_of: vec![0, 1, 2],
        }));
        roundtrip(Document::Labeling(Labeling {
            left_labels: vec![1, 0],
            right_labels: vec![0],
        }));
    }

    #[test]
    fn certificate_roundtrip() {
        let lc = crate::labelcover::LabelCover::new(1, 1, 2, 2, vec![]).unwrap();
        let cert = crate::reduce::verify_labelcover_to_rainbow(&lc, 3).unwrap();
        roundtrip(Document::GapCertificate(cert));
    }

    #[test]
    fn bad_documents_rejected() {
        assert!(parse("{\"type\": \"graph\", \"n\": 2, \"edges\": [[0, 5]]}").is_err());
        assert!(parse("{\"type\": \"nope\"}").is_err());
        assert!(parse("{\"n\": 2, \"edges\": []}").is_err());
        // coordinate outside [0,1]
        let text = r#"{"type": "packing_instance", "kind": "VBP", "dim": 1, "jobs": [["3/2"]]}"#;
        assert!(parse(text).is_err());
    }

    #[test]
    fn rational_strings_are_canonical() {
        let text = r#"{"type": "embedding", "dim": 1, "map": [["2/4"]]}"#;
        assert!(parse(text).is_err(), "non-reduced fraction must be rejected");
    }
}
