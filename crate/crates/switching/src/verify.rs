//! Empirical verifier for the cycles-union case: a switching whose
//! neighborhood graph is a disjoint union of cycles can only relabel a
//! connected min-degree-2 host.

use cospectra_graphs::{is_isomorphic, Graph};

use crate::neighborhood::{is_disjoint_cycles, neighborhood_graph};
use crate::switch::{apply_switch, OrthogonalSwitch, SwitchError};

/// Apply the switch and test isomorphism with the original. Requires a
/// connected host of minimum degree 2 whose neighborhood graph on the
/// switching set is a disjoint union of cycles; under those hypotheses
/// the result is expected to be `true` on every input, and a `false`
/// should be escalated as a hard failure by the caller.
pub fn union_cycles_switch_isomorphism(
    g: &Graph,
    s: &OrthogonalSwitch,
) -> Result<bool, SwitchError> {
    if !g.is_connected() {
        return Err(SwitchError::Precondition("host must be connected"));
    }
    if (0..g.n()).any(|v| g.degree(v) < 2) {
        return Err(SwitchError::Precondition("host must have minimum degree 2"));
    }
    let nb = neighborhood_graph(g, s.switch_vertices());
    if !is_disjoint_cycles(&nb.graph) {
        return Err(SwitchError::Precondition(
            "neighborhood graph of the switching set must be a union of cycles",
        ));
    }
    let h = apply_switch(g, s)?;
    Ok(is_isomorphic(g, &h))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gm::{figure_gm_instance, gm_find_sets};

    #[test]
    fn cycle_host_switches_to_itself() {
        // C8 with X the whole cycle: valid GM set, neighborhood graph is
        // the cycle itself, and cycles are determined by spectrum
        let g = Graph::cycle(8);
        let sets = gm_find_sets(&g, 2, 200);
        let mut tested = 0;
        for x in sets {
            let s = OrthogonalSwitch::godsil_mckay(&x, 2).unwrap();
            if apply_switch(&g, &s).is_err() {
                continue;
            }
            let nb = neighborhood_graph(&g, &x);
            if is_disjoint_cycles(&nb.graph) {
                assert_eq!(union_cycles_switch_isomorphism(&g, &s), Ok(true));
                tested += 1;
            }
        }
        assert!(tested > 0, "at least one cycles-union switch on C8");
    }

    #[test]
    fn degree_one_vertex_is_rejected_by_precondition() {
        let (g, x) = figure_gm_instance();
        let s = OrthogonalSwitch::godsil_mckay(&x, 2).unwrap();
        assert_eq!(
            union_cycles_switch_isomorphism(&g, &s),
            Err(SwitchError::Precondition("host must have minimum degree 2"))
        );
    }
}
