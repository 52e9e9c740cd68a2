//! U/D codes of tile trajectories.
//!
//! Along a trajectory `t[0], t[1], ...` each tile carries a lift. The code
//! letter flips exactly when the lift's gradient changes between
//! consecutive tiles and is otherwise repeated; the first letter is free.
//!
//! A traversal state is a lift plus the slot it leaves through. The
//! previous tile always sits on the opposite slot, so a letter relation
//! (same / flip) determines the successor uniquely:
//!
//! | exit | relation | next lift          | next exit |
//! |------|----------|--------------------|-----------|
//! | U    | same     | unshift(s_U)       | U         |
//! | U    | flip     | s_U                | D         |
//! | D    | same     | s_D                | D         |
//! | D    | flip     | unshift(s_D)       | U         |

use std::fmt;
use std::str::FromStr;

use crate::cone::Cone;
use crate::error::{Error, Result};
use crate::tile::{FlatTile, Gradient, SlantTile, Slot};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Letter {
    U,
    D,
}

impl Letter {
    pub fn flip(self) -> Self {
        match self {
            Letter::U => Letter::D,
            Letter::D => Letter::U,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Letter::U => 'U',
            Letter::D => 'D',
        }
    }
}

impl FromStr for Letter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "U" | "u" => Ok(Letter::U),
            "D" | "d" => Ok(Letter::D),
            other => Err(Error::Parse(format!("expected U or D, got {other:?}"))),
        }
    }
}

/// Relation between consecutive letters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Relation {
    Same,
    Flip,
}

impl Relation {
    pub fn between(a: Letter, b: Letter) -> Self {
        if a == b {
            Relation::Same
        } else {
            Relation::Flip
        }
    }
}

impl FromStr for Relation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "same" => Ok(Relation::Same),
            "flip" => Ok(Relation::Flip),
            other => Err(Error::Parse(format!(
                "expected same or flip, got {other:?}"
            ))),
        }
    }
}

/// A sequence of U/D letters. Text input may carry `-` separators and
/// whitespace anywhere.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LetterString(pub Vec<Letter>);

impl LetterString {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn relations(&self) -> Vec<Relation> {
        self.0
            .windows(2)
            .map(|w| Relation::between(w[0], w[1]))
            .collect()
    }

    pub fn inverted(&self) -> Self {
        Self(self.0.iter().map(|l| l.flip()).collect())
    }

    /// Letters joined by `-`, fifteen per line.
    pub fn grouped(&self) -> String {
        let lines: Vec<String> = self
            .0
            .chunks(15)
            .map(|c| {
                c.iter()
                    .map(|l| l.as_char().to_string())
                    .collect::<Vec<_>>()
                    .join("-")
            })
            .collect();
        lines.join("\n")
    }
}

impl fmt::Display for LetterString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            write!(f, "{}", l.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for LetterString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .filter(|c| !c.is_whitespace() && *c != '-')
            .map(|c| match c {
                'U' | 'u' => Ok(Letter::U),
                'D' | 'd' => Ok(Letter::D),
                other => Err(Error::Parse(format!(
                    "unexpected character {other:?} in code"
                ))),
            })
            .collect::<Result<Vec<_>>>()
            .map(LetterString)
    }
}

/// A lift together with the slot the trajectory leaves through.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TraversalState {
    pub lift: SlantTile,
    pub exit: Slot,
}

impl TraversalState {
    pub fn new(lift: SlantTile, exit: Slot) -> Self {
        Self { lift, exit }
    }

    pub fn flat(&self) -> FlatTile {
        self.lift.flat()
    }

    pub fn next_flat(&self) -> FlatTile {
        self.lift.neighbor_tile(self.exit).flat()
    }

    /// One decoder step. The returned lift is the representative that
    /// shares a facet with `self.lift` in the lattice.
    pub fn step(&self, relation: Relation) -> Self {
        let s = &self.lift;
        match (self.exit, relation) {
            (Slot::U, Relation::Same) => Self::new(s.up_tile().unshift(), Slot::U),
            (Slot::U, Relation::Flip) => Self::new(s.up_tile(), Slot::D),
            (Slot::D, Relation::Same) => Self::new(s.down_tile(), Slot::D),
            (Slot::D, Relation::Flip) => Self::new(s.down_tile().unshift(), Slot::U),
        }
    }
}

/// One tile of a trajectory: its flat, the lift used there, and the exit.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TileStep {
    pub flat: FlatTile,
    pub lift: SlantTile,
    pub exit: Slot,
}

impl TileStep {
    pub fn gradient(&self) -> Gradient {
        self.lift.gradient()
    }
}

/// Decode `code` starting from the lift `start`, leaving through `exit0`.
pub fn decode(code: &LetterString, start: &SlantTile, exit0: Slot) -> Result<Vec<TileStep>> {
    let first = *code.letters().first().ok_or(Error::EmptyCode)?;
    let mut state = TraversalState::new(start.clone(), exit0);
    let mut out = Vec::with_capacity(code.len());
    out.push(TileStep {
        flat: start.flat(),
        lift: start.clone(),
        exit: exit0,
    });
    let mut prev = first;
    for &letter in &code.letters()[1..] {
        state = state.step(Relation::between(prev, letter));
        out.push(TileStep {
            flat: state.flat(),
            lift: state.lift.clone(),
            exit: state.exit,
        });
        prev = letter;
    }
    Ok(out)
}

/// Second-derivative letters from a gradient sequence.
pub fn encode_letters(gradients: &[Gradient], init: Letter) -> LetterString {
    let mut out = Vec::with_capacity(gradients.len());
    let mut cur = init;
    for (i, g) in gradients.iter().enumerate() {
        if i > 0 && *g != gradients[i - 1] {
            cur = cur.flip();
        }
        out.push(cur);
    }
    LetterString(out)
}

/// Follows the vector field of a cone one tile at a time.
///
/// Yields `TrajectoryBreak` (and then stops) when the next surface lift
/// does not face back to the current tile.
pub struct Tracer<'a> {
    cone: &'a Cone,
    next: Option<Result<TileStep>>,
    index: usize,
}

impl<'a> Tracer<'a> {
    pub fn new(cone: &'a Cone, start: &FlatTile, exit0: Slot) -> Self {
        let first = cone.surface_lift(start).map(|lift| TileStep {
            flat: start.clone(),
            lift,
            exit: exit0,
        });
        Self {
            cone,
            next: Some(first),
            index: 0,
        }
    }

    fn advance(&self, cur: &TileStep) -> Result<TileStep> {
        let flat = cur.lift.neighbor_tile(cur.exit).flat();
        let lift = self.cone.surface_lift(&flat)?;
        let exit = if lift.up_tile().flat() == cur.flat {
            Slot::D
        } else if lift.down_tile().flat() == cur.flat {
            Slot::U
        } else {
            return Err(Error::TrajectoryBreak {
                tile: self.index + 1,
            });
        };
        Ok(TileStep { flat, lift, exit })
    }
}

impl Iterator for Tracer<'_> {
    type Item = Result<TileStep>;

    fn next(&mut self) -> Option<Self::Item> {
        let item = self.next.take()?;
        self.index += 1;
        if let Ok(step) = &item {
            self.next = Some(self.advance(step));
        }
        Some(item)
    }
}

/// Trace `steps` tiles of the cone's flow from `start`.
pub fn trace(cone: &Cone, start: &FlatTile, exit0: Slot, steps: usize) -> Result<Vec<TileStep>> {
    Tracer::new(cone, start, exit0).take(steps).collect()
}

/// Letters and lifts chosen by the cone-free encoder.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceCode {
    pub code: LetterString,
    pub lifts: Vec<SlantTile>,
}

/// Encode a flat-tile sequence without a cone.
///
/// Interior lifts are forced by their two neighbours. The first lift is the
/// one reaching `flats[1]` through `exit0`. The last lift is ambiguous (two
/// lifts face the predecessor); `final_policy` picks the one keeping the
/// previous gradient (`Same`) or the other (`Flip`).
pub fn encode_sequence(
    flats: &[FlatTile],
    init: Letter,
    exit0: Slot,
    final_policy: Relation,
) -> Result<SequenceCode> {
    let Some(first) = flats.first() else {
        return Err(Error::EmptyCode);
    };
    if flats.len() == 1 {
        return Ok(SequenceCode {
            code: LetterString(vec![init]),
            lifts: vec![first.rep().clone()],
        });
    }
    let mut lifts = Vec::with_capacity(flats.len());
    let head = first
        .neighbors()
        .into_iter()
        .find(|nb| nb.flat_on(exit0) == &flats[1])
        .ok_or(Error::NotAdjacent { tile: 2 })?;
    lifts.push(head.lift);
    for i in 1..flats.len() - 1 {
        if !flats[i].is_adjacent(&flats[i + 1]) {
            return Err(Error::NotAdjacent { tile: i + 2 });
        }
        let lift = flats[i]
            .lift_from_pair(&flats[i - 1], &flats[i + 1])
            .map_err(|_| Error::InvalidTurn { tile: i + 1 })?;
        lifts.push(lift);
    }
    let last = flats.len() - 1;
    let prev_gradient = lifts[last - 1].gradient();
    let candidates: Vec<SlantTile> = flats[last]
        .neighbors()
        .into_iter()
        .filter(|nb| nb.slot_of(&flats[last - 1]).is_some())
        .map(|nb| nb.lift)
        .collect();
    let tail = candidates
        .into_iter()
        .find(|l| (l.gradient() == prev_gradient) == (final_policy == Relation::Same))
        .ok_or(Error::NotAdjacent { tile: last + 1 })?;
    lifts.push(tail);
    let gradients: Vec<Gradient> = lifts.iter().map(SlantTile::gradient).collect();
    Ok(SequenceCode {
        code: encode_letters(&gradients, init),
        lifts,
    })
}

/// Octal digits of a code, three letters per digit with `U = 1`.
pub fn digits(code: &LetterString) -> Result<Vec<u8>> {
    if !code.len().is_multiple_of(3) {
        return Err(Error::LengthNotMultipleOfThree { len: code.len() });
    }
    Ok(code
        .letters()
        .chunks(3)
        .map(|c| {
            c.iter()
                .fold(0u8, |acc, l| 2 * acc + u8::from(*l == Letter::U))
        })
        .collect())
}

/// Inverse of [`digits`].
pub fn expand_digits(digits: &[u8]) -> Result<LetterString> {
    let mut out = Vec::with_capacity(3 * digits.len());
    for &d in digits {
        if d > 7 {
            return Err(Error::Parse(format!("digit {d} out of range 0..=7")));
        }
        for bit in [4, 2, 1] {
            out.push(if d & bit != 0 { Letter::U } else { Letter::D });
        }
    }
    Ok(LetterString(out))
}
