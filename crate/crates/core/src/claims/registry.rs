//! Published values for Γ_3, Γ_4 and Γ_5.
//!
//! Each entry is kept in the printed form (thousands separators removed,
//! LaTeX transcribed into the expression language of [`super::expr`]).
//! R-index values are printed as polynomials in constants `s`, `t`, `w`;
//! those are carried as bindings.

use crate::indices::IndexId;

use super::Claim;

const S3: &str = "7*4^6+31";
const T3: &str = "7^2*4^5+34";
const S45: &str = "31*16^10*10^20+391";
const T45: &str = "31^2*16^9*10^20+406";
const W5: &str = "31^2*16^10*10^19+412";

struct Entry {
    k: u32,
    index: IndexId,
    printed: &'static str,
    bindings: &'static [(&'static str, &'static str)],
    source: &'static str,
    note: Option<&'static str>,
}

const ST3: &[(&str, &str)] = &[("s", S3), ("t", T3)];
const STW: &[(&str, &str)] = &[("s", S45), ("t", T45), ("w", W5)];

const W4_NOTE: &str =
    "w is not defined alongside the Γ_4 statement; the w printed with Γ_5 is used, \
     matching the s and t printed for Γ_4 (which are themselves the Γ_5 R-degrees)";

const ENTRIES: &[Entry] = &[
    // Γ_3
    Entry {
        k: 3,
        index: IndexId::Wiener,
        printed: "37",
        bindings: &[],
        source: r"Γ_3 distance-matrix example: W(\Gamma_3)=37",
        note: None,
    },
    Entry {
        k: 3,
        index: IndexId::HyperWiener,
        printed: "46",
        bindings: &[],
        source: r"Γ_3 distance-matrix example: WW(\Gamma_3)=46",
        note: None,
    },
    Entry {
        k: 3,
        index: IndexId::Harary,
        printed: "23.5",
        bindings: &[],
        source: r"Γ_3 distance-matrix example: H(\Gamma_3)=23.5",
        note: None,
    },
    Entry {
        k: 3,
        index: IndexId::Balaban,
        printed: "19/26*((52+12*sqrt(70))/35)",
        bindings: &[],
        source: r"Γ_3 theorem: J(\Gamma_3)=\frac{19}{26}\biggl[\frac{52+12\sqrt{70}}{35}\biggr]",
        note: Some(
            "printed prefactor 19/26 is half of m/(μ+1) = 19/13; the bracket carries the factor 2, \
             so the full product is compared",
        ),
    },
    Entry {
        k: 3,
        index: IndexId::DegreeDistance,
        printed: "338",
        bindings: &[],
        source: r"Γ_3 theorem: DD(\Gamma_3)=338",
        note: None,
    },
    Entry {
        k: 3,
        index: IndexId::Gutman,
        printed: "769",
        bindings: &[],
        source: r"Γ_3 theorem: Gut(\Gamma_3)=769",
        note: None,
    },
    Entry {
        k: 3,
        index: IndexId::Harmonic,
        printed: "589/154",
        bindings: &[],
        source: r"Γ_3 theorem: Hm(\Gamma_3)=\frac{589}{154}",
        note: None,
    },
    Entry {
        k: 3,
        index: IndexId::R1,
        printed: "2*s^2+6*t^2",
        bindings: ST3,
        source: r"Γ_3 theorem: {R^1}(\Gamma_3)=2s^2+6t^2, s=7\cdot{4^6}+31, t={7^2}\cdot{4^5}+34",
        note: None,
    },
    Entry {
        k: 3,
        index: IndexId::R2,
        printed: "s^2+12*s*t+15*t^2",
        bindings: ST3,
        source: r"Γ_3 theorem: {R^2}(\Gamma_3)=s^2+12st+15t^2",
        note: Some(
            "derivation sums 3t(2s+5t) per ω=1 class; each ω=1 vertex of Γ_3 has two degree-4 \
             neighbours, not five",
        ),
    },
    Entry {
        k: 3,
        index: IndexId::R3,
        printed: "14*s+42*t",
        bindings: ST3,
        source: r"Γ_3 theorem: {R^3}(\Gamma_3)=14s+42t",
        note: Some("derivation uses the same 2(t+s)+5(t+t) neighbour count as R^2"),
    },
    Entry {
        k: 3,
        index: IndexId::Randic,
        printed: "(23+12*sqrt(7))/14",
        bindings: &[],
        source: r"Γ_3 theorem: R(\Gamma_3)=\biggl[\frac{23+12\sqrt{7}}{14}\biggr]",
        note: None,
    },
    Entry {
        k: 3,
        index: IndexId::Zagreb2,
        printed: "481",
        bindings: &[],
        source: r"Γ_3 theorem: {M_2}(\Gamma_3)=481",
        note: None,
    },
    Entry {
        k: 3,
        index: IndexId::Mostar,
        printed: "36",
        bindings: &[],
        source: r"Γ_3 theorem: Mo(\Gamma_3)=36",
        note: None,
    },
    // Γ_4
    Entry {
        k: 4,
        index: IndexId::Balaban,
        printed: "65/102*((202+16*sqrt(330)+66*sqrt(10)+60*sqrt(33))/165)",
        bindings: &[],
        source: r"Γ_4 theorem: J(\Gamma_4)=\frac{65}{102}\biggl[\frac{202+16\sqrt{330}+66\sqrt{10}+60\sqrt{33}}{165}\biggr]",
        note: None,
    },
    Entry {
        k: 4,
        index: IndexId::DegreeDistance,
        printed: "3712",
        bindings: &[],
        source: r"Γ_4 theorem: DD(\Gamma_4)=3 712",
        note: None,
    },
    Entry {
        k: 4,
        index: IndexId::Gutman,
        printed: "10557",
        bindings: &[],
        source: r"Γ_4 theorem: Gut(\Gamma_4)=10 557; Γ_4 proof, final line: =3712",
        note: Some("the statement and the closing line of its proof disagree (10 557 vs 3712)"),
    },
    Entry {
        k: 4,
        index: IndexId::Harmonic,
        printed: "36367/4830",
        bindings: &[],
        source: r"Γ_4 theorem: Hm(\Gamma_4)=\frac{36 367}{4 830}",
        note: None,
    },
    Entry {
        k: 4,
        index: IndexId::R1,
        printed: "2*s^2+8*t^2+6*w^2",
        bindings: STW,
        source: r"Γ_4 theorem: {R^1}(\Gamma_4)=2s^2+8t^2+6w^2, s=31\cdot {16^{10}}\cdot{10^{20}}+391, t={31^2}\cdot {16^9}\cdot{10^{20}}+406",
        note: Some(W4_NOTE),
    },
    Entry {
        k: 4,
        index: IndexId::R2,
        printed: "s^2+16*s*t+6*s*w+15*t^2+24*t*w",
        bindings: STW,
        source: r"Γ_4 theorem: {R^2}(\Gamma_4)=s^2+16st+6sw+15t^2+24tw",
        note: Some(W4_NOTE),
    },
    Entry {
        k: 4,
        index: IndexId::R3,
        printed: "24*s+70*t+30*w",
        bindings: STW,
        source: r"Γ_4 theorem: {R^3}(\Gamma_4)=24s+70t+30w",
        note: Some(W4_NOTE),
    },
    Entry {
        k: 4,
        index: IndexId::Randic,
        printed: "(47+60*sqrt(3)+12*sqrt(10)+8*sqrt(30))/30",
        bindings: &[],
        source: r"Γ_4 theorem: R(\Gamma_4)=\biggl[\frac{47+60\sqrt{3}+12\sqrt{10}+8\sqrt{30}}{30}\biggr]",
        note: None,
    },
    Entry {
        k: 4,
        index: IndexId::Zagreb2,
        printed: "3993",
        bindings: &[],
        source: r"Γ_4 theorem: {M_2}(\Gamma_4)=3993",
        note: None,
    },
    Entry {
        k: 4,
        index: IndexId::Mostar,
        printed: "268",
        bindings: &[],
        source: r"Γ_4 theorem: Mo(\Gamma_4)=268",
        note: None,
    },
    // Γ_5
    Entry {
        k: 5,
        index: IndexId::Balaban,
        printed: "211/362*((19353+260*sqrt(1426)+920*sqrt(403)+1550*sqrt(598))/9269)",
        bindings: &[],
        source: r"Γ_5 theorem: J(\Gamma_5)=\frac{211}{362}\biggl[\frac{19353+260\sqrt{1426}+920\sqrt{403}+1550\sqrt{598}}{9269}\biggr]",
        note: None,
    },
    Entry {
        k: 5,
        index: IndexId::DegreeDistance,
        printed: "19682",
        bindings: &[],
        source: r"Γ_5 theorem: DD(\Gamma_5)=19 682",
        note: None,
    },
    Entry {
        k: 5,
        index: IndexId::Gutman,
        printed: "124201",
        bindings: &[],
        source: r"Γ_5 theorem: Gut(\Gamma_5)=124 201",
        note: None,
    },
    Entry {
        k: 5,
        index: IndexId::Harmonic,
        printed: "45901681/3106324",
        bindings: &[],
        source: r"Γ_5 theorem: Hm(\Gamma_5)=\frac{45901681}{3106324}",
        note: None,
    },
    Entry {
        k: 5,
        index: IndexId::R1,
        printed: "2*s^2+10*t^2+20*w^2",
        bindings: STW,
        source: r"Γ_5 theorem: {R^1}(\Gamma_5)=2s^2+10t^2+20w^2, s=31\cdot {16^{10}}\cdot{10^{20}}+391, t={31^2}\cdot {16^9}\cdot{10^{20}}+406, w={31^2}\cdot {16^10}\cdot{10^19}+412",
        note: None,
    },
    Entry {
        k: 5,
        index: IndexId::R2,
        printed: "s^2+20*s*t+30*s*w+20*t^2+100*t*w+30*w^2",
        bindings: STW,
        source: r"Γ_5 theorem: {R^2}(\Gamma_5)=s^2+20st+30sw+20t^2+100tw+30w^2",
        note: None,
    },
    Entry {
        k: 5,
        index: IndexId::R3,
        printed: "52*s+160*t+190*w",
        bindings: STW,
        source: r"Γ_5 theorem: {R^3}(\Gamma_5)=52s+160t+190w",
        note: None,
    },
    Entry {
        k: 5,
        index: IndexId::Randic,
        printed: "(531+20*sqrt(31)+16*sqrt(310)+310*sqrt(10))/124",
        bindings: &[],
        source: r"Γ_5 theorem: R(\Gamma_5)=\biggl[\frac{531+20\sqrt{31}+16\sqrt{310}+310\sqrt{10}}{124}\biggr]",
        note: None,
    },
    Entry {
        k: 5,
        index: IndexId::Zagreb2,
        printed: "47401",
        bindings: &[],
        source: r"Γ_5 theorem: {M_2}(\Gamma_4)=47 401; Γ_5 proof: {M_2}(\Gamma_5) ... =47401",
        note: Some("printed with the label M_2(Γ_4) inside the Γ_5 statement; filed under Γ_5"),
    },
    Entry {
        k: 5,
        index: IndexId::Mostar,
        printed: "1720",
        bindings: &[],
        source: r"Γ_5 theorem: Mo(\Gamma_5)=1 720",
        note: None,
    },
];

pub fn builtin_claims() -> Vec<Claim> {
    ENTRIES
        .iter()
        .map(|e| Claim {
            id: format!("gamma{}.{}", e.k, e.index.name()),
            k: e.k,
            index: e.index,
            printed: e.printed.to_string(),
            bindings: e
                .bindings
                .iter()
                .map(|(n, v)| (n.to_string(), v.to_string()))
                .collect(),
            source: e.source.to_string(),
            note: e.note.map(str::to_string),
        })
        .collect()
}
