//! Encoding and decoding tables around a reference flat tile.
//!
//! The reference tile is `1[x1 .. x(N-1)]`. Every other flat tile is a
//! lattice translate and axis permutation of it, so these rows describe the
//! local rules everywhere.

use std::fmt;

use crate::codec::{Relation, TraversalState};
use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::tile::{FlatTile, Gradient, SlantTile, Slot};

/// One lift class with the flats on its two slots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassRow {
    pub lift: SlantTile,
    pub gradient: Gradient,
    pub u_flat: FlatTile,
    pub d_flat: FlatTile,
}

/// Ordered neighbour pair and the lift that realizes it, if any.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EncodeRow {
    pub prev: FlatTile,
    pub next: FlatTile,
    pub lift: Option<SlantTile>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecodeRow {
    pub lift: SlantTile,
    pub exit: Slot,
    pub relation: Relation,
    pub next_flat: FlatTile,
    pub next_lift: SlantTile,
    pub next_exit: Slot,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tables {
    pub dim: usize,
    pub reference: FlatTile,
    pub classes: Vec<ClassRow>,
    pub encode: Vec<EncodeRow>,
    pub decode: Vec<DecodeRow>,
}

pub fn make_tables(n: usize) -> Result<Tables> {
    if n < 3 {
        return Err(Error::InvalidDimension(n));
    }
    let reference = SlantTile::new(Monomial::identity(n), (0..n - 1).collect())?.flat();
    let neighbors = reference.neighbors();
    let classes: Vec<ClassRow> = neighbors
        .iter()
        .map(|nb| ClassRow {
            lift: nb.lift.clone(),
            gradient: nb.lift.gradient(),
            u_flat: nb.u_flat.clone(),
            d_flat: nb.d_flat.clone(),
        })
        .collect();

    // Each neighbour flat appears once as some u_flat; list them in that order.
    let adjacent: Vec<FlatTile> = neighbors.iter().map(|nb| nb.u_flat.clone()).collect();
    let mut encode = Vec::new();
    for prev in &adjacent {
        for next in &adjacent {
            if prev != next {
                encode.push(EncodeRow {
                    prev: prev.clone(),
                    next: next.clone(),
                    lift: reference.lift_from_pair(prev, next).ok(),
                });
            }
        }
    }

    let mut decode = Vec::new();
    for nb in &neighbors {
        for exit in [Slot::U, Slot::D] {
            for relation in [Relation::Same, Relation::Flip] {
                let next = TraversalState::new(nb.lift.clone(), exit).step(relation);
                decode.push(DecodeRow {
                    lift: nb.lift.clone(),
                    exit,
                    relation,
                    next_flat: next.flat(),
                    next_lift: next.lift,
                    next_exit: next.exit,
                });
            }
        }
    }

    Ok(Tables {
        dim: n,
        reference,
        classes,
        encode,
        decode,
    })
}

fn relation_name(r: Relation) -> &'static str {
    match r {
        Relation::Same => "same",
        Relation::Flip => "flip",
    }
}

impl fmt::Display for Tables {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "# reference {}", self.reference)?;
        writeln!(f, "# classes: lift gradient u-flat d-flat")?;
        for c in &self.classes {
            writeln!(
                f,
                "{} {} {} {}",
                c.lift,
                c.gradient.display(self.dim),
                c.u_flat,
                c.d_flat
            )?;
        }
        writeln!(f, "# encode: prev next lift")?;
        for r in &self.encode {
            match &r.lift {
                Some(l) => writeln!(f, "{} {} {}", r.prev, r.next, l)?,
                None => writeln!(f, "{} {} invalid", r.prev, r.next)?,
            }
        }
        writeln!(
            f,
            "# decode: lift exit relation next-flat next-lift next-exit"
        )?;
        for r in &self.decode {
            writeln!(
                f,
                "{} {} {} {} {} {}",
                r.lift,
                r.exit,
                relation_name(r.relation),
                r.next_flat,
                r.next_lift,
                r.next_exit
            )?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_tables() {
        let t = make_tables(3).unwrap();
        assert_eq!(t.classes.len(), 3);
        assert_eq!(t.encode.len(), 6);
        assert!(t.encode.iter().all(|r| r.lift.is_some()));
        assert_eq!(t.decode.len(), 12);
    }

    #[test]
    fn tetrahedron_tables_have_two_diagonals() {
        let t = make_tables(4).unwrap();
        assert_eq!(t.classes.len(), 4);
        assert_eq!(t.encode.len(), 12);
        assert_eq!(t.encode.iter().filter(|r| r.lift.is_none()).count(), 4);
    }

    #[test]
    fn slot_cycle_closes() {
        for n in 3..=6 {
            let t = make_tables(n).unwrap();
            let k = t.classes.len();
            assert_eq!(k, n);
            for i in 0..k {
                assert_eq!(t.classes[i].d_flat, t.classes[(i + 1) % k].u_flat);
            }
        }
        assert_eq!(make_tables(2), Err(Error::InvalidDimension(2)));
    }

    #[test]
    fn decode_rows_face_back() {
        for n in 3..=5 {
            for r in make_tables(n).unwrap().decode {
                let back = r.next_lift.neighbor_tile(r.next_exit.toggle()).flat();
                assert_eq!(back, r.lift.flat());
                let keeps = r.next_lift.gradient() == r.lift.gradient();
                assert_eq!(keeps, r.relation == Relation::Same);
            }
        }
    }
}
