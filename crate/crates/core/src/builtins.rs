//! Named arrangements, addressable on the command line as `@name`.

use crate::arrangement::{
    icosidodecahedral, AffineLine, AnyArrangement, CentralArrangement, CentralPlane, LineArrangement,
    ParsedArrangement,
};
use crate::scalar::Rational;
use crate::{Error, Result};

/// `(name, description)` for every builtin, in listing order.
pub const BUILTINS: &[(&str, &str)] = &[
    ("icosidodecahedral", "16 central planes over Q(sqrt5): 6 edge planes, 10 diagonal planes"),
    ("icosidodecahedral-decone", "the 15 affine lines left by deconing at the first edge plane"),
    ("boolean2", "the lines x = 0 and y = 0"),
    ("boolean3", "the coordinate planes in R^3"),
    ("generic3", "three lines in general position: x = 0, y = 0, x + y = 1"),
    ("pencil3", "three lines through the origin"),
    ("parallel2", "the parallel lines x = 0 and x = 1"),
    ("braid", "the rank-3 braid arrangement: x, y, z, x - y, x - z, y - z"),
    ("grid3", "the 3 x 3 grid x, y in {0, 1, 2}"),
    ("bowtie", "three lines through the origin cut by x = -1 and x = 1"),
];

fn lines(ls: &[(i64, i64, i64)]) -> AnyArrangement {
    let lines = ls
        .iter()
        .map(|&(a, b, c)| AffineLine::new(Rational::from(a), Rational::from(b), Rational::from(c)).unwrap())
        .collect();
    AnyArrangement::Rational(ParsedArrangement::Lines(LineArrangement::new(lines).unwrap()))
}

fn planes(ps: &[[i64; 3]]) -> AnyArrangement {
    let planes = ps.iter().map(|n| CentralPlane::new(n.map(Rational::from)).unwrap()).collect();
    AnyArrangement::Rational(ParsedArrangement::Planes(CentralArrangement::new(planes).unwrap()))
}

/// The builtin called `name` (without the `@`).
pub fn builtin(name: &str) -> Result<AnyArrangement> {
    Ok(match name {
        "icosidodecahedral" => AnyArrangement::Golden(ParsedArrangement::Planes(icosidodecahedral())),
        "icosidodecahedral-decone" => {
            let a = icosidodecahedral();
            AnyArrangement::Golden(ParsedArrangement::Lines(a.decone(a.default_decone_index())?))
        }
        "boolean2" => lines(&[(1, 0, 0), (0, 1, 0)]),
        "boolean3" => planes(&[[1, 0, 0], [0, 1, 0], [0, 0, 1]]),
        "generic3" => lines(&[(1, 0, 0), (0, 1, 0), (1, 1, 1)]),
        "pencil3" => lines(&[(1, 0, 0), (0, 1, 0), (1, -1, 0)]),
        "parallel2" => lines(&[(1, 0, 0), (1, 0, 1)]),
        "braid" => planes(&[[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, -1, 0], [1, 0, -1], [0, 1, -1]]),
        "grid3" => lines(&[(1, 0, 0), (1, 0, 1), (1, 0, 2), (0, 1, 0), (0, 1, 1), (0, 1, 2)]),
        "bowtie" => lines(&[(1, 0, -1), (1, 0, 1), (0, 1, 0), (1, 1, 0), (1, -1, 0)]),
        _ => return Err(Error::UnknownBuiltin(name.to_string())),
    })
}

/// Resolves `@name` to a builtin and anything else to a file path.
pub fn load(reference: &str) -> Result<AnyArrangement> {
    match reference.strip_prefix('@') {
        Some(name) => builtin(name),
        None => {
            let text = std::fs::read_to_string(reference)
                .map_err(|source| Error::Read { path: reference.to_string(), source })?;
            AnyArrangement::parse(&text)
        }
    }
}
