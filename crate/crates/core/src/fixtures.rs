//! Reference mosaics in t-code form.
//!
//! These are the worked examples used throughout the test suites and by the
//! CLI smoke tests.

/// All 22 knot 3-mosaics in lexicographic order.
///
/// The published list labels two different entries `K16` and has no `K17`;
/// entries here are numbered by position. The label printed for `K2` reads
/// `000-210-349`, but its drawing (and the only valid grid) is `000-210-340`.
pub const APPENDIX_A: [&str; 22] = [
    "000-000-000",
    "000-021-034",
    "000-210-340",
    "000-251-354",
    "021-034-000",
    "021-066-034",
    "021-246-354",
    "021-274-340",
    "021-284-340",
    "021-294-340",
    "021-2(10)4-340",
    "210-340-000",
    "210-371-034",
    "210-381-034",
    "210-391-034",
    "210-3(10)1-034",
    "210-631-354",
    "210-660-340",
    "251-316-034",
    "251-354-000",
    "251-606-354",
    "251-624-340",
];

/// A 4-mosaic that is not a knot mosaic.
pub const NON_KNOT_4: &str = "0540-4941-9382-3640";

/// Trefoil 4-mosaic.
pub const TREFOIL: &str = "0210-29(10)1-6394-3540";

/// The trefoil padded by one blank row and column.
pub const TREFOIL_INJECTED: &str = "02100-29(10)10-63940-35400-00000";

pub const HOPF_4: &str = "2510-6291-3946-0354";

pub const FIGURE_EIGHT_5: &str = "25510-60291-62946-39(10)54-03400";

pub const BORROMEAN_6: &str = "002551-25(10)106-629(10)16-6639(10)4-395460-035540";

/// Host 4-mosaic whose 3-submosaic at (0,1) is `540-941-022`.
pub const SUBMOSAIC_HOST_A: &str = "0540-4941-1022-3640";

/// Two 4-mosaics interchanged by a Reidemeister 2-move at (0,1) ...
pub const INTRO_A: &str = "0210-2991-39(10)4-0340";
pub const INTRO_B: &str = "0210-2871-39(10)4-0340";
/// ... and one left fixed by it.
pub const INTRO_FIXED: &str = "0210-2(10)91-39(10)4-0340";
/// The move relating [`INTRO_A`] and [`INTRO_B`], as `(lhs, rhs)` 2-mosaics at (0,1).
pub const INTRO_MOVE: (&str, &str) = ("21-99", "21-87");

/// A 2-move at (0,1) switching two 3-mosaics and fixing a third.
pub const THREE_CASE_MOVE: (&str, &str) = ("92-82", "70-15");
pub const THREE_CASE_SWITCHED: (&str, &str) = ("592-482-(10)18", "570-415-(10)18");
pub const THREE_CASE_FIXED: &str = "502-489-(10)18";

/// The two basis mosaics of a uniform superposition in K(5), and the move
/// (a 2-move at (2,1)) that sends it to the superposition of
/// [`EXAMPLE_5_OUT`] and the second input term.
pub const EXAMPLE_5_IN: (&str, &str) = ("02510-295(10)1-3(10)166-03994-00340", "02510-295(10)1-39166-03994-00340");
pub const EXAMPLE_5_MOVE: (&str, &str) = ("(10)1-39", "71-37");
pub const EXAMPLE_5_OUT: &str = "02510-295(10)1-37166-03794-00340";

/// Second term of the two-term superposition in K(4).
pub const SUPERPOSITION_4_PARTNER: &str = "0210-2971-3794-0340";

/// Second projector term of the two-term diagonal observable on K(4).
pub const OBSERVABLE_4_PARTNER: &str = "0210-29(10)1-3794-0340";

/// A circle basis state, and two circles in uniform superposition; not
/// equivalent as quantum knots.
pub const PSI_1: &str = "251-606-354";
pub const PSI_2: (&str, &str) = ("210-340-000", "000-021-034");

/// Oriented 4-mosaic that is an oriented knot mosaic under this crate's tile table.
pub const ORIENTED_KNOT_4: &str = "0650-6(21)(24)5-27(23)8-7380";
