use std::collections::BTreeMap;

use super::free::{generators, FreePolynomial, Generator, Monomial};
use super::AlgebraError;
use crate::graph::{EdgeId, RankedDigraph, VertexId};

/// An algebra map `T(E#) -> T(E'#)` given by the images of the generators.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GeneratorMap {
    pub images: BTreeMap<Generator, FreePolynomial>,
}

impl GeneratorMap {
    pub fn identity(g: &RankedDigraph) -> Self {
        GeneratorMap {
            images: generators(g)
                .into_iter()
                .map(|x| (x, FreePolynomial::generator(x)))
                .collect(),
        }
    }

    pub fn image(&self, x: Generator) -> Option<&FreePolynomial> {
        self.images.get(&x)
    }

    pub fn apply_monomial(&self, m: &Monomial) -> Result<FreePolynomial, AlgebraError> {
        let mut acc = FreePolynomial::one();
        for x in &m.0 {
            let img = self
                .images
                .get(x)
                .ok_or_else(|| AlgebraError::MissingGenerator(format!("a{}(#{})", x.index, x.edge.0)))?;
            acc = &acc * img;
            if acc.is_zero() {
                break;
            }
        }
        Ok(acc)
    }

    pub fn apply(&self, p: &FreePolynomial) -> Result<FreePolynomial, AlgebraError> {
        let mut out = FreePolynomial::zero();
        for (m, c) in p.terms() {
            out = &out + &self.apply_monomial(m)?.scale(c);
        }
        Ok(out)
    }

    /// `self` after `first`: `x -> self(first(x))`.
    pub fn after(&self, first: &GeneratorMap) -> Result<GeneratorMap, AlgebraError> {
        let images = first
            .images
            .iter()
            .map(|(x, p)| Ok((*x, self.apply(p)?)))
            .collect::<Result<_, AlgebraError>>()?;
        Ok(GeneratorMap { images })
    }
}

/// A morphism of generalized layered graphs, indexed by source vertex and edge ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Morphism {
    pub vertex_map: Vec<VertexId>,
    pub edge_map: Vec<EdgeId>,
}

impl Morphism {
    pub fn identity(g: &RankedDigraph) -> Self {
        Morphism {
            vertex_map: g.vertices().collect(),
            edge_map: g.edges().collect(),
        }
    }

    /// Checks `t(phi(e)) = phi(t(e))`, `h(phi(e)) = phi(h(e))` and `l(phi(e)) <= l(e)`.
    pub fn validate(&self, src: &RankedDigraph, dst: &RankedDigraph) -> Result<(), AlgebraError> {
        let law = |e: EdgeId, reason: String| AlgebraError::MorphismLaw {
            edge: src.edge_name(e).to_string(),
            reason,
        };
        if self.vertex_map.len() != src.vertex_count() || self.edge_map.len() != src.edge_count() {
            return Err(AlgebraError::MorphismLaw {
                edge: String::new(),
                reason: "map sizes do not match the source graph".to_string(),
            });
        }
        if let Some(v) = self.vertex_map.iter().find(|v| v.0 >= dst.vertex_count()) {
            return Err(AlgebraError::MorphismLaw {
                edge: String::new(),
                reason: format!("vertex image #{} not in the target graph", v.0),
            });
        }
        for e in src.edges() {
            let f = self.edge_map[e.0];
            if f.0 >= dst.edge_count() {
                return Err(law(e, format!("edge image #{} not in the target graph", f.0)));
            }
            if dst.tail(f) != self.vertex_map[src.tail(e).0] {
                return Err(law(
                    e,
                    format!("tail of {} is not the image of the tail", dst.edge_name(f)),
                ));
            }
            if dst.head(f) != self.vertex_map[src.head(e).0] {
                return Err(law(
                    e,
                    format!("head of {} is not the image of the head", dst.edge_name(f)),
                ));
            }
            if dst.length(f) > src.length(e) {
                return Err(law(
                    e,
                    format!(
                        "image {} is longer ({} > {})",
                        dst.edge_name(f),
                        dst.length(f),
                        src.length(e)
                    ),
                ));
            }
        }
        Ok(())
    }

    /// `a_i(e) -> a_i(phi(e))`, or `0` once `i > l(phi(e))`.
    pub fn induced_generator_map(
        &self,
        src: &RankedDigraph,
        dst: &RankedDigraph,
    ) -> Result<GeneratorMap, AlgebraError> {
        self.validate(src, dst)?;
        let images = generators(src)
            .into_iter()
            .map(|x| {
                let f = self.edge_map[x.edge.0];
                let img = if x.index <= dst.length(f) {
                    FreePolynomial::generator(Generator::new(f, x.index))
                } else {
                    FreePolynomial::zero()
                };
                (x, img)
            })
            .collect();
        Ok(GeneratorMap { images })
    }

    /// `other` after `self`.
    pub fn then(&self, other: &Morphism) -> Morphism {
        Morphism {
            vertex_map: self.vertex_map.iter().map(|v| other.vertex_map[v.0]).collect(),
            edge_map: self.edge_map.iter().map(|e| other.edge_map[e.0]).collect(),
        }
    }
}

/// The map `T(E#) -> T(E^w#)` for a vertex placed on `e`, where `e` has been
/// replaced by `e1` (upper part) and `e2` (lower part) in `dst`. Edges other
/// than `e` are matched by name.
///
/// `a_j(e) -> sum over k of a_(j-k)(e1) a_k(e2)` with `a_0 = 1`, so that
/// `P_e(t)` goes to `P_e1(t) P_e2(t)`.
pub fn add_vertex_map(
    src: &RankedDigraph,
    e: EdgeId,
    dst: &RankedDigraph,
    e1: EdgeId,
    e2: EdgeId,
) -> Result<GeneratorMap, AlgebraError> {
    let (l1, l2) = (dst.length(e1), dst.length(e2));
    if l1 + l2 != src.length(e) || l1 == 0 || l2 == 0 {
        return Err(AlgebraError::InvalidSplit {
            edge: src.edge_name(e).to_string(),
            length: src.length(e),
            index: l2,
        });
    }
    let a = |f: EdgeId, i: u32| {
        if i == 0 {
            FreePolynomial::one()
        } else {
            FreePolynomial::generator(Generator::new(f, i))
        }
    };
    let mut images = BTreeMap::new();
    for x in generators(src) {
        let img = if x.edge == e {
            let j = x.index;
            let mut acc = FreePolynomial::zero();
            for k in j.saturating_sub(l1)..=j.min(l2) {
                acc = &acc + &(&a(e1, j - k) * &a(e2, k));
            }
            acc
        } else {
            let name = src.edge_name(x.edge);
            let f = dst.edge_by_name(name)?;
            FreePolynomial::generator(Generator::new(f, x.index))
        };
        images.insert(x, img);
    }
    Ok(GeneratorMap { images })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::paths::{edge_poly, path_poly};
    use crate::graph::parse_graph;

    fn gen(e: EdgeId, i: u32) -> FreePolynomial {
        FreePolynomial::generator(Generator::new(e, i))
    }

    #[test]
    fn identity_morphism() {
        let g = parse_graph("vertex u 2\nvertex v 0\nedge e u v\n").unwrap();
        let id = Morphism::identity(&g).induced_generator_map(&g, &g).unwrap();
        assert_eq!(id, GeneratorMap::identity(&g));
        let p = &gen(EdgeId(0), 1) * &gen(EdgeId(0), 2);
        assert_eq!(id.apply(&p).unwrap(), p);
    }

    #[test]
    fn collapsing_length_two_onto_one() {
        let src = parse_graph("vertex u 2\nvertex v 0\nedge e u v\n").unwrap();
        let dst = parse_graph("vertex u 1\nvertex v 0\nedge f u v\n").unwrap();
        let phi = Morphism {
            vertex_map: vec![VertexId(0), VertexId(1)],
            edge_map: vec![EdgeId(0)],
        };
        let m = phi.induced_generator_map(&src, &dst).unwrap();
        assert_eq!(m.image(Generator::new(EdgeId(0), 1)), Some(&gen(EdgeId(0), 1)));
        assert!(m.image(Generator::new(EdgeId(0), 2)).unwrap().is_zero());
        assert!(matches!(
            phi.induced_generator_map(&dst, &src),
            Err(AlgebraError::MorphismLaw { .. })
        ));
    }

    #[test]
    fn tail_mismatch_is_rejected() {
        let src = parse_graph("vertex u 1\nvertex v 0\nedge e u v\n").unwrap();
        let dst = parse_graph("vertex u 1\nvertex v 0\nedge f u v\n").unwrap();
        let phi = Morphism {
            vertex_map: vec![VertexId(1), VertexId(1)],
            edge_map: vec![EdgeId(0)],
        };
        assert!(phi.validate(&src, &dst).is_err());
    }

    #[test]
    fn split_length_two_edge() {
        let src = parse_graph("vertex u 2\nvertex v 0\nedge e u v\n").unwrap();
        let dst = parse_graph("vertex u 2\nvertex v 0\nvertex w 1\nedge e_1 u w\nedge e_2 w v\n").unwrap();
        let (e1, e2) = (EdgeId(0), EdgeId(1));
        let m = add_vertex_map(&src, EdgeId(0), &dst, e1, e2).unwrap();
        assert_eq!(
            m.image(Generator::new(EdgeId(0), 1)),
            Some(&(&gen(e1, 1) + &gen(e2, 1)))
        );
        assert_eq!(
            m.image(Generator::new(EdgeId(0), 2)),
            Some(&(&gen(e1, 1) * &gen(e2, 1)))
        );
    }

    #[test]
    fn split_maps_edge_poly_to_path_poly() {
        for (len, i) in [(3, 1), (3, 2), (4, 1), (4, 2), (4, 3), (5, 2)] {
            let src = parse_graph(&format!("vertex u {len}\nvertex v 0\nedge e u v\n")).unwrap();
            let dst = parse_graph(&format!(
                "vertex u {len}\nvertex v 0\nvertex w {i}\nedge e_1 u w\nedge e_2 w v\n"
            ))
            .unwrap();
            let m = add_vertex_map(&src, EdgeId(0), &dst, EdgeId(0), EdgeId(1)).unwrap();
            let before = edge_poly(&src, EdgeId(0));
            let after = path_poly(&dst, &[EdgeId(0), EdgeId(1)]).unwrap();
            for j in 0..=len as usize {
                assert_eq!(
                    m.apply(before.coeff(j)).unwrap(),
                    *after.coeff(j),
                    "len {len} i {i} j {j}"
                );
            }
        }
    }

    #[test]
    fn functoriality_on_composable_maps() {
        let a = parse_graph("vertex u 3\nvertex v 0\nedge e u v\n").unwrap();
        let b = parse_graph("vertex u 2\nvertex v 0\nedge f u v\n").unwrap();
        let c = parse_graph("vertex u 1\nvertex v 0\nedge h u v\n").unwrap();
        let phi = Morphism {
            vertex_map: vec![VertexId(0), VertexId(1)],
            edge_map: vec![EdgeId(0)],
        };
        let psi = phi.clone();
        let composite = phi.then(&psi).induced_generator_map(&a, &c).unwrap();
        let stepwise = psi
            .induced_generator_map(&b, &c)
            .unwrap()
            .after(&phi.induced_generator_map(&a, &b).unwrap())
            .unwrap();
        assert_eq!(composite, stepwise);
    }
}
