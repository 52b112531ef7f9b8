use serde::Serialize;

use super::DualPairSet;
use crate::ncalg::NcTermWire;
use crate::scalar::ScalarWire;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DualPairSetWire {
    pub beta: Vec<i64>,
    pub e_words: Vec<Vec<String>>,
    pub f_words: Vec<Vec<String>>,
    pub gram: Vec<Vec<ScalarWire>>,
    pub rank: usize,
    pub terms: Vec<(Vec<NcTermWire>, Vec<NcTermWire>)>,
}

impl DualPairSet {
    pub fn to_wire(&self) -> DualPairSetWire {
        let names = |ws: &[Vec<crate::ncalg::Letter>]| -> Vec<Vec<String>> {
            ws.iter().map(|w| w.iter().map(|l| l.name()).collect()).collect()
        };
        DualPairSetWire {
            beta: self.beta.clone(),
            e_words: names(&self.e_words),
            f_words: names(&self.f_words),
            gram: self.gram.iter().map(|r| r.iter().map(|x| x.to_wire()).collect()).collect(),
            rank: self.rank,
            terms: self.terms.iter().map(|(u, v)| (u.to_wire(), v.to_wire())).collect(),
        }
    }
}
