//! Published tables, transcribed verbatim including their misprints.
//!
//! Verification code compares against these values and reports every
//! disagreement; nothing here is corrected.

/// One row of the table of small semiprimitive pairs: (p, m, [(k, bold)]).
/// Bold marks k ≠ p^ℓ + 1 for every ℓ | m/2.
pub type Table1Row = (u64, u32, &'static [(u64, bool)]);

pub const TABLE1: &[Table1Row] = &[
    (2, 2, &[]),
    (2, 4, &[(3, false)]),
    (2, 6, &[(3, false)]),
    (2, 8, &[(5, false)]),
    (3, 2, &[]),
    (3, 4, &[(2, false), (4, false), (5, true)]),
    (3, 6, &[(2, false), (4, false), (7, true), (14, true)]),
    (3, 8, &[(2, false), (4, false), (5, true), (10, true), (41, true)]),
    (5, 2, &[(2, false), (3, true)]),
    (5, 4, &[(2, false), (3, true), (6, false), (13, true)]),
    (
        5,
        6,
        &[
            (2, false),
            (3, true),
            (6, false),
            (7, true),
            (9, true),
            (14, true),
            (18, true),
            (21, true),
            (42, true),
            (63, true),
        ],
    ),
    (5, 8, &[(2, false), (3, true), (6, false), (13, true), (26, false), (313, true)]),
    (7, 2, &[(2, false), (4, true)]),
    (7, 4, &[(2, false), (4, true), (5, true), (8, false), (10, true), (25, true)]),
    (
        7,
        6,
        &[
            (2, false),
            (4, true),
            (5, true),
            (8, false),
            (10, true),
            (25, true),
            (43, true),
            (50, false),
            (86, true),
            (172, true),
        ],
    ),
    (7, 8, &[(2, false), (4, true), (5, true), (8, false), (10, true), (25, true), (50, false), (1201, true)]),
];

#[derive(Clone, Copy, Debug)]
pub struct Table2Row {
    pub k: u64,
    pub p: u64,
    pub m: u32,
    pub complement: bool,
    /// (v, n, e, d).
    pub srg: (u64, u64, u64, u64),
    /// Full spectrum, principal eigenvalue first.
    pub spectrum: &'static [(i64, u64)],
    pub t: u32,
    pub s: u32,
    /// "no" or "L_δ(w)".
    pub label: &'static str,
}

const fn row(
    k: u64,
    p: u64,
    m: u32,
    complement: bool,
    srg: (u64, u64, u64, u64),
    spectrum: &'static [(i64, u64)],
    t: u32,
    s: u32,
    label: &'static str,
) -> Table2Row {
    Table2Row { k, p, m, complement, srg, spectrum, t, s, label }
}

pub const TABLE2: [Table2Row; 20] = [
    row(3, 2, 4, false, (16, 5, 0, 2), &[(5, 1), (1, 10), (-3, 5)], 1, 2, "no"),
    row(3, 2, 4, true, (16, 10, 6, 6), &[(10, 1), (2, 5), (-2, 10)], 1, 2, "no"),
    row(3, 2, 6, false, (64, 21, 8, 6), &[(21, 1), (5, 21), (-3, 42)], 1, 3, "L_3(8)"),
    row(3, 2, 6, true, (64, 42, 26, 30), &[(42, 1), (2, 42), (-6, 21)], 1, 3, "L_6(8)"),
    row(3, 5, 2, false, (25, 8, 3, 2), &[(8, 1), (3, 8), (-2, 16)], 1, 1, "L_2(5)"),
    row(3, 5, 2, true, (25, 16, 9, 12), &[(16, 1), (1, 16), (-4, 8)], 1, 1, "L_4(5)"),
    row(3, 5, 4, false, (625, 208, 63, 72), &[(208, 1), (8, 416), (-17, 208)], 1, 2, "no"),
    row(3, 5, 4, true, (625, 416, 279, 272), &[(416, 1), (16, 208), (-9, 416)], 1, 2, "no"),
    row(4, 3, 4, false, (81, 20, 1, 6), &[(20, 1), (2, 60), (-7, 20)], 1, 2, "no"),
    row(4, 3, 4, true, (81, 60, 45, 42), &[(60, 1), (6, 20), (-3, 60)], 1, 2, "no"),
    row(4, 3, 6, false, (729, 182, 55, 42), &[(182, 1), (20, 182), (-7, 546)], 1, 3, "L_7(27)"),
    row(4, 3, 6, true, (729, 546, 405, 420), &[(546, 1), (6, 546), (-21, 182)], 1, 3, "L_21(27)"),
    row(4, 7, 2, false, (49, 12, 5, 2), &[(12, 1), (5, 12), (-2, 36)], 1, 1, "L_2(7)"),
    row(4, 7, 2, true, (49, 36, 25, 30), &[(36, 1), (1, 36), (-6, 12)], 1, 1, "L_6(7)"),
    row(4, 7, 4, false, (2401, 600, 131, 156), &[(600, 1), (12, 1800), (-37, 600)], 1, 2, "no"),
    row(4, 7, 4, true, (2401, 1800, 1332, 1355), &[(1800, 1), (36, 600), (-13, 1800)], 1, 2, "no"),
    row(5, 3, 4, false, (81, 16, 7, 2), &[(16, 1), (7, 16), (-2, 64)], 2, 1, "L_2(9)"),
    row(5, 3, 4, true, (81, 64, 49, 56), &[(64, 1), (1, 64), (-8, 16)], 2, 1, "L_8(9)"),
    row(5, 7, 4, false, (2401, 480, 119, 90), &[(480, 1), (39, 480), (-10, 1920)], 2, 1, "L_10(49)"),
    row(5, 7, 4, true, (2401, 1920, 1560, 1529), &[(1920, 1), (9, 1920), (-40, 480)], 2, 1, "L_40(49)"),
];

/// Printed data of an exceptional pair as decimal strings.
#[derive(Clone, Copy, Debug)]
pub struct ExceptionalRow {
    pub k: u64,
    pub p: u64,
    pub m: u32,
    pub q: &'static str,
    pub n: &'static str,
    pub e: &'static str,
    pub d: &'static str,
    pub lambda1: &'static str,
    pub m1: &'static str,
    pub lambda2: &'static str,
    pub m2: &'static str,
    pub w1: &'static str,
    pub w2: &'static str,
}

pub const EXCEPTIONAL_TABLES: [ExceptionalRow; 8] = [
    ExceptionalRow {
        k: 11,
        p: 3,
        m: 5,
        q: "243",
        n: "22",
        e: "1",
        d: "2",
        lambda1: "4",
        m1: "132",
        lambda2: "-5",
        m2: "110",
        w1: "22",
        w2: "18",
    },
    ExceptionalRow {
        k: 19,
        p: 5,
        m: 9,
        q: "1953125",
        n: "102796",
        e: "5379",
        d: "5412",
        lambda1: "296",
        m1: "1027960",
        lambda2: "-329",
        m2: "925164",
        w1: "82000",
        w2: "82500",
    },
    ExceptionalRow {
        k: 35,
        p: 3,
        m: 12,
        q: "531441",
        n: "15184",
        e: "427",
        d: "434",
        lambda1: "118",
        m1: "273312",
        lambda2: "-125",
        m2: "258128",
        w1: "10044",
        w2: "10026",
    },
    ExceptionalRow {
        k: 37,
        p: 7,
        m: 9,
        q: "40353607",
        n: "1090638",
        e: "282771",
        d: "29510",
        lambda1: "584",
        m1: "30537864",
        lambda2: "-1817",
        m2: "9815742",
        w1: "934332",
        w2: "936390",
    },
    ExceptionalRow {
        k: 43,
        p: 11,
        m: 7,
        q: "19487171",
        n: "453190",
        e: "10509",
        d: "10540",
        lambda1: "650",
        m1: "9970180",
        lambda2: "-681",
        m2: "9516990",
        w1: "411400",
        w2: "412610",
    },
    ExceptionalRow {
        k: 67,
        p: 17,
        m: 33,
        q: "40254497110927943179349807054456171205137",
        n: "600813389715342435512683687379942853808",
        e: "8967364025602125902458937044032559119",
        d: "8967364025602125903185223489938034768",
        lambda1: "23967452714880696416",
        m1: "20427655250321642807431245370918057029472",
        lambda2: "-24693739160786172065",
        m2: "19826841860606300371918561683538114175664",
        w1: "565471425614439939283497632625940854016",
        w2: "565471425614439939329296401450097906704",
    },
    ExceptionalRow {
        k: 107,
        p: 3,
        m: 53,
        q: "19383245667680019896796723",
        n: "181151828669906728007446",
        e: "360610649595226895872817",
        d: "360610649595234814457952",
        lambda1: "419685012154",
        m1: "9782198748174963312402084",
        lambda2: "-427603597289",
        m2: "9601046919505056584394638",
        w1: "120767885779658028663528",
        w2: "120767885780222887736490",
    },
    ExceptionalRow {
        k: 133,
        p: 5,
        m: 18,
        q: "3814697265625",
        n: "28681934328",
        e: "215848943",
        d: "215652162",
        lambda1: "-96922",
        m1: "2868193432800",
        lambda2: "293703",
        m2: "946503832824",
        w1: "22945625000",
        w2: "22945312500",
    },
];
