//! `generate`: named posets as poset JSON, adversarial families as bundles.

use crate::{emit, load_poset, CmdResult, Failure};
use ffchain::constructions as cons;
use ffchain::io;
use std::path::Path;

pub fn run(family: &str, param: Option<usize>, out: Option<&Path>) -> CmdResult {
    let need = |what: &str| -> Result<usize, Failure> {
        param.ok_or_else(|| Failure::Schema(format!("family '{family}' needs {what}")))
    };
    let content = match family {
        "chain" => io::poset_to_json(&cons::chain(need("an element count")?)),
        "antichain" => io::poset_to_json(&cons::antichain(need("an element count")?)),
        "ladder" => io::poset_to_json(&cons::ladder(need("a height")?)),
        "n" => io::poset_to_json(&cons::n_poset()),
        "butterfly" => io::poset_to_json(&cons::butterfly()),
        "stacked" => {
            let t = need("a height")?;
            if t < 1 {
                return Err(Failure::Schema("stacked butterfly needs height ≥ 1".into()));
            }
            io::poset_to_json(&cons::stacked_butterfly(t))
        }
        "skewed" => io::poset_to_json(&cons::skewed_butterfly()),
        "reservoir" => {
            let artifact = cons::reservoir(need("a width k")?).map_err(Failure::schema)?;
            io::reservoir_bundle(&artifact)
        }
        "butterfly-lb" => {
            let artifact =
                cons::butterfly_lower_bound(need("a prime q")? as u64).map_err(Failure::schema)?;
            io::butterfly_bundle(&artifact)
        }
        other => {
            return Err(Failure::Schema(format!(
                "unknown family '{other}'; expected chain, antichain, ladder, n, butterfly, stacked, skewed, reservoir, or butterfly-lb"
            )))
        }
    };
    emit(out, &content)
}

pub fn run_export_dot(poset: &Path, out: Option<&Path>) -> CmdResult {
    let p = load_poset(poset)?;
    emit(out, &io::dot_export(&p))
}
