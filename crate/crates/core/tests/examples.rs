macro_rules! example {
    ($module:ident, $file:literal) => {
        #[allow(dead_code)]
        mod $module {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }
    };
}

example!(enumerate, "enumerate.rs");
example!(generating_function, "generating_function.rs");
example!(recurrence, "recurrence.rs");
example!(state_graph, "state_graph.rs");
example!(growth_table, "growth_table.rs");
example!(asymptotics, "asymptotics.rs");
example!(polynomial_toolkit, "polynomial_toolkit.rs");

#[test]
fn enumerate_example_runs() {
    enumerate::run_example().expect("enumerate example should run");
}

#[test]
fn generating_function_example_runs() {
    generating_function::run_example().expect("generating function example should run");
}

#[test]
fn recurrence_example_runs() {
    recurrence::run_example().expect("recurrence example should run");
}

#[test]
fn state_graph_example_runs() {
    state_graph::run_example().expect("state graph example should run");
}

#[test]
fn growth_table_example_runs() {
    growth_table::run_example().expect("growth table example should run");
}

#[test]
fn asymptotics_example_runs() {
    asymptotics::run_example().expect("asymptotics example should run");
}

#[test]
fn polynomial_toolkit_example_runs() {
    polynomial_toolkit::run_example().expect("polynomial toolkit example should run");
}
