//! Anomalies in the source tables. Labels are stored as printed; these
//! entries record what looks wrong and how it is handled.

use crate::cartan::CartanType;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Erratum {
    pub id: &'static str,
    pub cartan: CartanType,
    pub summary: &'static str,
}

pub const ERRATA: &[Erratum] = &[
    Erratum {
        id: "e8-label-3200_32",
        cartan: CartanType::E8,
        summary: "3200_32 is printed among rows with b between 21 and 23; the b-value looks wrong. Stored as printed.",
    },
    Erratum {
        id: "e8-label-160_3",
        cartan: CartanType::E8,
        summary: "160_3 is paired with 210_4; a b-value of 3 is below that of the row head. Stored as printed.",
    },
    Erratum {
        id: "e8-label-79_32",
        cartan: CartanType::E8,
        summary: "79_32 names no character of W(E8); 70_32 does, and 79^2 - 70^2 = 1341. Stored as printed.",
    },
    Erratum {
        id: "e8-label-50_9",
        cartan: CartanType::E8,
        summary: "50_9 is printed where the character of degree 50 with b-value 8 is expected. Stored as printed.",
    },
    Erratum {
        id: "e8-missing-84_64",
        cartan: CartanType::E8,
        summary: "No row is headed by 84_64, so only 111 of the 112 characters of W(E8) occur as empty-Levi entries. The squared dimensions sum to |W| - 5715 = |W| - 84^2 + 1341, which the missing character and 79_32 account for. The registry has 111 characters and the parameter set 165 triples.",
    },
    Erratum {
        id: "e7-duplicate-e6-symbol",
        cartan: CartanType::E7,
        summary: "(E6,1,0)#2 is printed in the rows of 1_0 and 21_3; read as the two characters of the relative Weyl group A1, trivial in the row of 1_0.",
    },
    Erratum {
        id: "e8-duplicate-e7-symbol",
        cartan: CartanType::E8,
        summary: "(E7,1,0)#2 is printed in the rows of 1_0 and 84_4; read as the two characters of the relative Weyl group A1, trivial in the row of 1_0.",
    },
    Erratum {
        id: "g2-d0-support",
        cartan: CartanType::G2,
        summary: "For d = 0 no characteristic makes all three cuspidal objects unipotently supported, yet G2 is not among the types listed for that case; the three objects are placed in the unit stratum like the E8 and F4 cases.",
    },
    Erratum {
        id: "e8-levi-e-star",
        cartan: CartanType::E8,
        summary: "The cuspidal Levi printed as E_* is read as E8 itself, with trivial relative Weyl group.",
    },
    Erratum {
        id: "f4-unit-label",
        cartan: CartanType::F4,
        summary: "chi_{1,1} is not stated to be the unit representation; only its row, which receives the d = 0 cuspidal objects, is used.",
    },
    Erratum {
        id: "e8-d0-centralizer",
        cartan: CartanType::E8,
        summary: "The d = 0 centralizer types contradict a published claim: in characteristic 2 no semisimple element has centralizer of type A5xA2xA1.",
    },
];

pub fn errata_for(t: CartanType) -> Vec<&'static Erratum> {
    ERRATA.iter().filter(|e| e.cartan == t).collect()
}
