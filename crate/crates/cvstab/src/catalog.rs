//! Catalog of named continuous-variable stabilizer codes.
//!
//! Generator matrices are stored verbatim, signs included. Logical pairs are
//! the catalog's stored operators where we have them; pairs computed from the
//! generators instead are flagged `derived` in the accompanying notes.

use crate::code::{concatenate, logical_basis, LogicalBasis, StabilizerCode};
use crate::error::{Error, Result};
use crate::scalar::ratio;
use crate::symplectic::PauliVector;

/// A catalog entry: the code, a logical basis, and free-form notes rendered
/// as comments by the CLI.
#[derive(Clone, Debug)]
pub struct Builtin {
    pub code: StabilizerCode,
    pub basis: LogicalBasis,
    pub notes: &'static [&'static str],
}

pub fn builtin_names() -> &'static [&'static str] {
    &[
        "three-mode-q",
        "three-mode-p",
        "nine-mode",
        "five-mode-braunstein",
        "eight-mode-gottesman",
    ]
}

/// Look up a code by name. See [`builtin_names`] for the accepted names.
pub fn builtin(name: &str) -> Result<Builtin> {
    match name {
        "three-mode-q" => Ok(three_mode_q()),
        "three-mode-p" => Ok(three_mode_p()),
        "nine-mode" => Ok(nine_mode()),
        "five-mode-braunstein" => Ok(five_mode_braunstein()),
        "eight-mode-gottesman" => Ok(eight_mode_gottesman()),
        other => Err(Error::UnknownBuiltin(other.to_string())),
    }
}

/// Three-mode repetition code in position: position differences are
/// nullified, so a single position (q) shift on any one mode is correctable.
fn three_mode_q() -> Builtin {
    let code = StabilizerCode::validate(vec![
        PauliVector::from_ints(&[0, 0, 0], &[1, -1, 0]),
        PauliVector::from_ints(&[0, 0, 0], &[0, 1, -1]),
    ])
    .expect("catalog matrix is valid")
    .with_name("three-mode-q");
    let pairs = vec![(
        PauliVector::from_ints(&[1, 1, 1], &[0, 0, 0]),
        PauliVector::from_ints(&[0, 0, 0], &[1, 0, 0]),
    )];
    let basis = LogicalBasis::new(&code, pairs).expect("catalog basis is valid");
    Builtin {
        code,
        basis,
        notes: &["logical z derived"],
    }
}

/// Three-mode repetition code in momentum: the roles of the two quadratures
/// are exchanged, so a single momentum (p) shift is correctable.
fn three_mode_p() -> Builtin {
    let code = StabilizerCode::validate(vec![
        PauliVector::from_ints(&[1, -1, 0], &[0, 0, 0]),
        PauliVector::from_ints(&[0, 1, -1], &[0, 0, 0]),
    ])
    .expect("catalog matrix is valid")
    .with_name("three-mode-p");
    let basis = logical_basis(&code);
    Builtin {
        code,
        basis,
        notes: &["logical pair derived"],
    }
}

/// Nine-mode code: the three-mode position code with every mode re-encoded
/// by the three-mode momentum code. Its logical shifts are the uniform
/// displacements on all nine modes; the stored z is scaled by 1/9 so the
/// pairing is exactly 1.
fn nine_mode() -> Builtin {
    let q = three_mode_q();
    let p = three_mode_p();
    let (code, _lifted) = concatenate(&q.code, &p.code).expect("concatenation is valid");
    let code = code.with_name("nine-mode");
    let x = PauliVector::from_ints(&[1; 9], &[0; 9]);
    let ninth = ratio(1, 9);
    let z = PauliVector::from_ints(&[0; 9], &[1; 9]).scaled(&ninth);
    let basis = LogicalBasis::new(&code, vec![(x, z)]).expect("catalog basis is valid");
    Builtin {
        code,
        basis,
        notes: &[
            "generators: concatenate(three-mode-q, three-mode-p)",
            "logical z scaled by 1/9 to normalize the pairing",
        ],
    }
}

/// Five-mode code correcting an arbitrary single-mode shift; encodes one
/// logical mode in five.
fn five_mode_braunstein() -> Builtin {
    let code = StabilizerCode::validate(vec![
        PauliVector::from_ints(&[1, 0, 0, -1, -1], &[0, 0, 1, -1, 0]),
        PauliVector::from_ints(&[0, 1, 0, 0, 1], &[1, 0, 0, 1, 0]),
        PauliVector::from_ints(&[0, 0, 1, 1, 0], &[1, 0, 0, 0, 1]),
        PauliVector::from_ints(&[0, 0, 0, 0, 0], &[0, -1, 1, -1, 1]),
    ])
    .expect("catalog matrix is valid")
    .with_name("five-mode-braunstein");
    let pairs = vec![(
        PauliVector::from_ints(&[0, 1, 1, 0, 0], &[1, 0, 0, 0, 0]),
        PauliVector::from_ints(&[1, 0, 0, 0, 0], &[0, 1, 1, 0, 0]),
    )];
    let basis = LogicalBasis::new(&code, pairs).expect("catalog basis is valid");
    Builtin {
        code,
        basis,
        notes: &[],
    }
}

/// Eight-mode code encoding three logical modes and correcting an arbitrary
/// single-mode shift.
///
/// Slot 4 of logical x3 carries a position shift with coefficient -1: that
/// is the unique value in {-1, 0, +1} commuting with all five generators,
/// and the full pairing table then holds with no further sign fixes.
fn eight_mode_gottesman() -> Builtin {
    let code = StabilizerCode::validate(vec![
        PauliVector::from_ints(&[1, 1, 1, 1, 1, 1, 1, 1], &[0, 0, 0, 0, 0, 0, 0, 0]),
        PauliVector::from_ints(&[0, 0, 0, 0, 0, 0, 0, 0], &[1, 1, 1, 1, -1, -1, -1, -1]),
        PauliVector::from_ints(&[0, 1, 0, 1, 1, 0, 1, 0], &[0, 0, 0, 0, -1, -1, 1, 1]),
        PauliVector::from_ints(&[0, 1, 0, 1, 0, 1, 0, 1], &[0, 0, 1, -1, 0, 0, 1, -1]),
        PauliVector::from_ints(&[0, 1, 1, 0, 1, 0, 0, 1], &[0, 1, 0, -1, 0, 1, 0, -1]),
    ])
    .expect("catalog matrix is valid")
    .with_name("eight-mode-gottesman");
    let pairs = vec![
        (
            PauliVector::from_ints(&[1, -1, 0, 0, 0, 0, 0, 0], &[0, 0, 0, 0, 0, 1, 0, -1]),
            PauliVector::from_ints(&[0, 0, 0, 0, 0, 0, 0, 0], &[0, -1, 0, 1, 0, -1, 0, 1]),
        ),
        (
            PauliVector::from_ints(&[1, 0, -1, 0, 0, 0, 0, 0], &[0, 0, 0, -1, 0, 0, 1, 0]),
            PauliVector::from_ints(&[0, 0, 0, 0, 0, 0, 0, 0], &[0, 0, -1, -1, 0, 0, 1, 1]),
        ),
        (
            PauliVector::from_ints(&[1, 0, 0, 0, 1, 0, 0, 0], &[0, 0, 0, -1, 0, 1, 0, 0]),
            PauliVector::from_ints(&[0, 0, 0, 0, 0, 0, 0, 0], &[0, 0, 0, 0, 1, 1, -1, -1]),
        ),
    ];
    let basis = LogicalBasis::new(&code, pairs).expect("catalog basis is valid");
    Builtin {
        code,
        basis,
        notes: &["x3 slot 4 fixed to a -1 position shift by commutation with the generators"],
    }
}
