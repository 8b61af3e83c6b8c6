//! Emit Graphviz DOT for a labeled cycle and for the decomposition it
//! generates; pipe either through `dot -Tsvg` to draw them.

use dgraceful::{decomposition_dot, df_from_labeling, expand, labeling_dot, Graph, Labeling};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let labeling = Labeling::new(Graph::cycle(6)?, 2, vec![0, 5, 2, 3, 1, 7])?;
    print!("{}", labeling_dot(&labeling));

    let decomposition = expand(&df_from_labeling(&labeling)?)?;
    print!("{}", decomposition_dot(&decomposition));
    Ok(())
}
