//! Two-part factorizations of line arrangements, with the propagation trace
//! that rules them out.
//!
//!     cargo run --example factorization

use arrlab::builtins::builtin;
use arrlab::arrangement::{AnyArrangement, ParsedArrangement};
use arrlab::factored::{factorization_search, is_factorization};
use arrlab::report::factor_report;

fn main() {
    for name in ["boolean2", "pencil3", "generic3", "grid3"] {
        let AnyArrangement::Rational(ParsedArrangement::Lines(l)) = builtin(name).unwrap() else { unreachable!() };
        let s = factorization_search(&l);
        let ok = s.factorization.as_ref().map(|f| is_factorization(&l, f.parts()));
        println!("@{name}: {} (independent check: {ok:?})", if ok.is_some() { "factored" } else { "not factored" });
    }

    let a = arrlab::icosidodecahedral();
    let l = a.decone(a.default_decone_index()).unwrap();
    println!("\ndeconed icosidodecahedral arrangement:\n{}", factor_report(&l));
}
