use crate::ideal::{reduce_full, Ideal};
use crate::order::TermOrder;
use crate::poly::Poly;
use crate::ring::{same_roster, Roster};
use crate::{Error, Result};
use std::sync::Arc;

/// A ring homomorphism between polynomial rings, given on variables. Used
/// for chart projections and for specializing parameters to constants.
///
/// Preimages are computed by graph-ideal elimination: over the disjoint
/// union roster, the relations `x_src - image(x_src)` are adjoined and the
/// destination block is eliminated.
#[derive(Debug, Clone)]
pub struct RingMap {
    src: Arc<Roster>,
    dst: Arc<Roster>,
    images: Vec<Poly>,
    graph: GraphRing,
}

#[derive(Debug, Clone)]
struct GraphRing {
    /// src variables renamed (position i = src var i), then dst variables.
    roster: Arc<Roster>,
    src_names: Vec<String>,
    /// graph Gröbner basis under the dst-elimination order, for lifting
    graph_basis: Vec<Poly>,
    elim_order: TermOrder,
    dst_block: Vec<usize>,
}

impl RingMap {
    /// Build from a per-variable table; every src variable needs an image.
    pub fn new(src: &Arc<Roster>, dst: &Arc<Roster>, images: Vec<Poly>) -> Result<RingMap> {
        if images.len() != src.len() {
            return Err(Error::Structural(format!(
                "expected {} images, got {}",
                src.len(),
                images.len()
            )));
        }
        for im in &images {
            if !same_roster(im.roster(), dst) {
                return Err(Error::RosterMismatch(
                    dst.to_string(),
                    im.roster().to_string(),
                ));
            }
        }
        let graph = GraphRing::build(src, dst, &images);
        Ok(RingMap {
            src: src.clone(),
            dst: dst.clone(),
            images,
            graph,
        })
    }

    /// Convenience: map given by (src var name -> expression over dst).
    pub fn from_table(
        src: &Arc<Roster>,
        dst: &Arc<Roster>,
        table: &[(&str, Poly)],
    ) -> Result<RingMap> {
        let mut images: Vec<Option<Poly>> = vec![None; src.len()];
        for (name, img) in table {
            let i = src
                .index_of(name)
                .ok_or_else(|| Error::UnmappedVariable(name.to_string()))?;
            images[i] = Some(img.clone());
        }
        let images: Result<Vec<Poly>> = images
            .into_iter()
            .enumerate()
            .map(|(i, o)| o.ok_or_else(|| Error::UnmappedVariable(src.name(i).to_string())))
            .collect();
        RingMap::new(src, dst, images?)
    }

    /// Identity on a roster.
    pub fn identity(roster: &Arc<Roster>) -> RingMap {
        let images = roster
            .names()
            .iter()
            .map(|n| Poly::var(roster, n))
            .collect();
        RingMap::new(roster, roster, images).unwrap()
    }

    pub fn src(&self) -> &Arc<Roster> {
        &self.src
    }

    pub fn dst(&self) -> &Arc<Roster> {
        &self.dst
    }

    pub fn image_of(&self, var: &str) -> Option<&Poly> {
        self.src.index_of(var).map(|i| &self.images[i])
    }

    pub fn apply(&self, f: &Poly) -> Result<Poly> {
        if !same_roster(f.roster(), &self.src) {
            return Err(Error::RosterMismatch(
                self.src.to_string(),
                f.roster().to_string(),
            ));
        }
        let imgs: Vec<Option<Poly>> = self.images.iter().cloned().map(Some).collect();
        f.substitute(&self.dst, &imgs)
    }

    pub fn apply_ideal(&self, ideal: &Ideal) -> Result<Ideal> {
        let gens: Result<Vec<Poly>> = ideal.generators().iter().map(|g| self.apply(g)).collect();
        Ideal::new(&self.dst, gens?)
    }

    /// Composition `self` then `after`.
    pub fn then(&self, after: &RingMap) -> Result<RingMap> {
        if !same_roster(&self.dst, &after.src) {
            return Err(Error::RosterMismatch(
                self.dst.to_string(),
                after.src.to_string(),
            ));
        }
        let images: Result<Vec<Poly>> = self.images.iter().map(|im| after.apply(im)).collect();
        RingMap::new(&self.src, &after.dst, images?)
    }

    /// Surjectivity onto the destination ring: every dst variable must be
    /// in the image subalgebra. Checked by normal forms against the graph
    /// basis under the dst-elimination order.
    pub fn is_surjective(&self) -> bool {
        self.first_unreached().is_none()
    }

    pub fn check_surjective(&self) -> Result<()> {
        match self.first_unreached() {
            None => Ok(()),
            Some(v) => Err(Error::NotSurjective(v)),
        }
    }

    fn first_unreached(&self) -> Option<String> {
        for name in self.dst.names() {
            let v = Poly::var(&self.graph.roster, name);
            let nf = reduce_full(&v, &self.graph.graph_basis, &self.graph.elim_order);
            if nf
                .terms()
                .any(|(m, _)| !m.supported_on(&self.graph.src_block()))
            {
                return Some(name.clone());
            }
        }
        None
    }

    /// Kernel of the map as an ideal of the source ring.
    pub fn kernel(&self) -> Result<Ideal> {
        self.preimage(&Ideal::zero(&self.dst))
    }

    /// Preimage of an ideal of the destination ring: kernel generators
    /// plus arbitrary lifts of the target generators. Requires the map to
    /// be surjective so that lifts exist.
    ///
    /// Coordinate maps that are affine-triangular in the destination
    /// variables admit a polynomial section; the preimage then has the
    /// closed form `<x - s(pr(x))> + <s(g)>` and needs no elimination.
    /// Other maps fall back to graph-ideal elimination.
    pub fn preimage(&self, ideal: &Ideal) -> Result<Ideal> {
        if !same_roster(ideal.roster(), &self.dst) {
            return Err(Error::RosterMismatch(
                self.dst.to_string(),
                ideal.roster().to_string(),
            ));
        }
        if let Some(section) = self.section() {
            let mut gens = Vec::new();
            for name in self.src.names() {
                let x = Poly::var(&self.src, name);
                let pulled = section.apply(self.image_of(name).unwrap())?;
                let rel = &x - &pulled;
                if !rel.is_zero() {
                    gens.push(rel);
                }
            }
            for g in ideal.generators() {
                gens.push(section.apply(g)?);
            }
            return Ideal::new(&self.src, gens);
        }
        self.check_surjective()?;
        // Graph ideal + target generators, eliminate the dst block.
        let mut gens: Vec<Poly> = self.graph.graph_relations();
        for g in ideal.generators() {
            gens.push(g.embed(&self.graph.roster));
        }
        let big = Ideal::new(&self.graph.roster, gens)?;
        let renamed_src = Roster::new(self.graph.src_names.clone());
        let elim = big.eliminate(&self.graph.dst_block, &renamed_src)?;
        // Rename back onto the source roster.
        let back: Vec<Poly> = elim
            .generators()
            .iter()
            .map(|g| rename(g, &renamed_src, &self.src))
            .collect();
        Ideal::new(&self.src, back)
    }

    /// A polynomial section of the map (a ring map `s: dst -> src` with
    /// `pr ∘ s = id`), when one can be read off triangularly: repeatedly
    /// pick a source variable whose image is `c*d + (terms in already
    /// solved destination variables)` for a rational constant `c` and an
    /// unsolved destination variable `d`.
    pub fn section(&self) -> Option<RingMap> {
        let n = self.dst.len();
        let mut solved: Vec<Option<Poly>> = vec![None; n];
        // shared variables that map to themselves are solved immediately
        for (d, name) in self.dst.names().iter().enumerate() {
            if let Some(i) = self.src.index_of(name) {
                if self.images[i] == Poly::var(&self.dst, name) {
                    solved[d] = Some(Poly::var(&self.src, name));
                }
            }
        }
        loop {
            if solved.iter().all(|s| s.is_some()) {
                let images: Vec<Poly> = solved.into_iter().map(|s| s.unwrap()).collect();
                return RingMap::new(&self.dst, &self.src, images).ok();
            }
            let mut progressed = false;
            for (i, img) in self.images.iter().enumerate() {
                // candidate: image is linear in exactly one unsolved dst
                // variable, with a constant coefficient, all other
                // variables solved
                let mut pivot: Option<(usize, crate::Rat)> = None;
                let mut ok = true;
                for (m, c) in img.terms() {
                    let unsolved: Vec<usize> = (0..n)
                        .filter(|&d| m.exp(d) > 0 && solved[d].is_none())
                        .collect();
                    match unsolved.len() {
                        0 => {}
                        1 => {
                            let d = unsolved[0];
                            if m.exp(d) != 1 || m.total_degree() != 1 {
                                ok = false;
                                break;
                            }
                            match &pivot {
                                None => pivot = Some((d, c.clone())),
                                Some(_) => {
                                    ok = false;
                                    break;
                                }
                            }
                        }
                        _ => {
                            ok = false;
                            break;
                        }
                    }
                }
                let (Some((d, c)), true) = (pivot, ok) else {
                    continue;
                };
                // d = (x_i - rest(solved)) / c
                let x = Poly::var(&self.src, self.src.name(i));
                let dvar = Poly::var(&self.dst, self.dst.name(d));
                let rest = img - &dvar.scale(&c);
                // rest only involves solved dst variables
                let imgs: Vec<Option<Poly>> = solved.clone();
                let Ok(rest_src) = rest.substitute(&self.src, &imgs) else {
                    continue;
                };
                let inv = crate::Rat::from_integer(1.into()) / c;
                solved[d] = Some((&x - &rest_src).scale(&inv));
                progressed = true;
            }
            if !progressed {
                return None;
            }
        }
    }

    /// A lift of `g` along the map (any preimage). Requires surjectivity.
    pub fn lift(&self, g: &Poly) -> Result<Poly> {
        if !same_roster(g.roster(), &self.dst) {
            return Err(Error::RosterMismatch(
                self.dst.to_string(),
                g.roster().to_string(),
            ));
        }
        let nf = reduce_full(
            &g.embed(&self.graph.roster),
            &self.graph.graph_basis,
            &self.graph.elim_order,
        );
        if nf
            .terms()
            .any(|(m, _)| !m.supported_on(&self.graph.src_block()))
        {
            return Err(Error::Structural(format!(
                "no lift: {g} is not in the image subalgebra"
            )));
        }
        let renamed_src = Roster::new(self.graph.src_names.clone());
        Ok(rename(&nf.restrict(&renamed_src), &renamed_src, &self.src))
    }
}

impl GraphRing {
    fn build(src: &Arc<Roster>, dst: &Arc<Roster>, images: &[Poly]) -> GraphRing {
        // Rename src variables to avoid collisions with dst names.
        let src_names: Vec<String> = src
            .names()
            .iter()
            .map(|n| {
                if dst.index_of(n).is_some() {
                    format!("{n}#s")
                } else {
                    n.clone()
                }
            })
            .collect();
        let mut all = src_names.clone();
        all.extend(dst.names().iter().cloned());
        let roster = Roster::new(all);
        let dst_block: Vec<usize> = (src.len()..src.len() + dst.len()).collect();
        let relations: Vec<Poly> = (0..src.len())
            .map(|i| {
                let xs = Poly::var(&roster, &src_names[i]);
                let img = images[i].embed(&roster);
                &xs - &img
            })
            .collect();
        let elim_order = TermOrder::eliminate(&roster, &dst_block);
        let graph_basis = crate::ideal::buchberger(&relations, &elim_order);
        GraphRing {
            roster,
            src_names,
            graph_basis,
            elim_order,
            dst_block,
        }
    }

    fn graph_relations(&self) -> Vec<Poly> {
        self.graph_basis.clone()
    }

    fn src_block(&self) -> Vec<usize> {
        (0..self.src_names.len()).collect()
    }
}

fn rename(f: &Poly, from: &Arc<Roster>, to: &Arc<Roster>) -> Poly {
    debug_assert_eq!(from.len(), to.len());
    let imgs: Vec<Option<Poly>> = (0..from.len())
        .map(|i| Some(Poly::var(to, to.name(i))))
        .collect();
    let _ = f;
    f.substitute(to, &imgs).expect("rename is total")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    #[test]
    fn identity_preimage() {
        let r = Roster::parse("x,y");
        let id = RingMap::identity(&r);
        let i = Ideal::new(&r, vec![parse_poly(&r, "x^2 + y").unwrap()]).unwrap();
        let pre = id.preimage(&i).unwrap();
        assert!(pre.equals(&i).unwrap());
        assert!(id.is_surjective());
    }

    #[test]
    fn kernel_of_projection() {
        // x -> u, y -> u: kernel is <x - y>.
        let src = Roster::parse("x,y");
        let dst = Roster::parse("u");
        let m = RingMap::new(
            &src,
            &dst,
            vec![parse_poly(&dst, "u").unwrap(), parse_poly(&dst, "u").unwrap()],
        )
        .unwrap();
        let k = m.kernel().unwrap();
        let want = Ideal::new(&src, vec![parse_poly(&src, "x - y").unwrap()]).unwrap();
        assert!(k.equals(&want).unwrap());
    }

    #[test]
    fn non_surjective_detected() {
        // x -> u^2 does not reach u.
        let src = Roster::parse("x");
        let dst = Roster::parse("u");
        let m = RingMap::new(&src, &dst, vec![parse_poly(&dst, "u^2").unwrap()]).unwrap();
        assert!(!m.is_surjective());
        assert!(m.preimage(&Ideal::zero(&dst)).is_err());
    }

    #[test]
    fn preimage_respects_membership() {
        // pr: (x,y,z) -> (a, a*b, b): preimage of <a> should contain x and x*...
        let src = Roster::parse("x,y,z");
        let dst = Roster::parse("a,b");
        let m = RingMap::new(
            &src,
            &dst,
            vec![
                parse_poly(&dst, "a").unwrap(),
                parse_poly(&dst, "a*b").unwrap(),
                parse_poly(&dst, "b").unwrap(),
            ],
        )
        .unwrap();
        assert!(m.is_surjective());
        let i = Ideal::new(&dst, vec![parse_poly(&dst, "a").unwrap()]).unwrap();
        let pre = m.preimage(&i).unwrap();
        // x maps to a ∈ I; y maps to a*b ∈ I; z maps to b ∉ I.
        assert!(pre.contains(&parse_poly(&src, "x").unwrap()).unwrap());
        assert!(pre.contains(&parse_poly(&src, "y").unwrap()).unwrap());
        assert!(pre.contains(&parse_poly(&src, "y - x*z").unwrap()).unwrap());
        assert!(!pre.contains(&parse_poly(&src, "z").unwrap()).unwrap());
    }

    #[test]
    fn lift_section() {
        let src = Roster::parse("x,y");
        let dst = Roster::parse("a");
        let m = RingMap::new(
            &src,
            &dst,
            vec![parse_poly(&dst, "a + 1").unwrap(), parse_poly(&dst, "a").unwrap()],
        )
        .unwrap();
        let g = parse_poly(&dst, "a^2 + 3").unwrap();
        let h = m.lift(&g).unwrap();
        assert_eq!(m.apply(&h).unwrap(), g);
    }

    #[test]
    fn section_route_matches_elimination_route() {
        // a triangular affine map has a section; its preimage agrees with
        // the elimination-based one
        let src = Roster::parse("x,y,z,p");
        let dst = Roster::parse("a,b,p");
        let m = RingMap::new(
            &src,
            &dst,
            vec![
                parse_poly(&dst, "a - p").unwrap(),
                parse_poly(&dst, "b + 2 a").unwrap(),
                parse_poly(&dst, "p*a").unwrap(),
                parse_poly(&dst, "p").unwrap(),
            ],
        )
        .unwrap();
        let s = m.section().expect("triangular map has a section");
        // pr ∘ s = id on destination variables
        for name in dst.names() {
            let round = m.apply(&s.apply(&Poly::var(&dst, name)).unwrap()).unwrap();
            assert_eq!(round, Poly::var(&dst, name));
        }
        let i = Ideal::new(
            &dst,
            vec![parse_poly(&dst, "a*b - p").unwrap(), parse_poly(&dst, "b^2").unwrap()],
        )
        .unwrap();
        let fast = m.preimage(&i).unwrap();
        // elimination route, forced
        let mut gens: Vec<Poly> = m.graph.graph_relations();
        for g in i.generators() {
            gens.push(g.embed(&m.graph.roster));
        }
        let big = Ideal::new(&m.graph.roster, gens).unwrap();
        let renamed_src = Roster::new(m.graph.src_names.clone());
        let elim = big.eliminate(&m.graph.dst_block, &renamed_src).unwrap();
        let back: Vec<Poly> = elim
            .generators()
            .iter()
            .map(|g| rename(g, &renamed_src, &m.src))
            .collect();
        let slow = Ideal::new(&m.src, back).unwrap();
        assert!(fast.equals(&slow).unwrap());
    }

    #[test]
    fn non_triangular_map_has_no_section() {
        let src = Roster::parse("x");
        let dst = Roster::parse("a");
        let m = RingMap::new(&src, &dst, vec![parse_poly(&dst, "a^2").unwrap()]).unwrap();
        assert!(m.section().is_none());
    }

    #[test]
    fn shared_variable_maps_through() {
        // p appears on both sides and maps to itself.
        let src = Roster::parse("x,p");
        let dst = Roster::parse("a,p");
        let m = RingMap::new(
            &src,
            &dst,
            vec![
                parse_poly(&dst, "a - p").unwrap(),
                parse_poly(&dst, "p").unwrap(),
            ],
        )
        .unwrap();
        assert!(m.is_surjective());
        let i = Ideal::new(&dst, vec![parse_poly(&dst, "a").unwrap()]).unwrap();
        let pre = m.preimage(&i).unwrap();
        assert!(pre.contains(&parse_poly(&src, "x + p").unwrap()).unwrap());
        assert!(!pre.contains(&parse_poly(&src, "x").unwrap()).unwrap());
    }
}
