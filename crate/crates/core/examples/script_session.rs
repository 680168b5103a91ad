use superpoisson::lang::{run_session, Session};

const SCRIPT: &str = "
chart R2|2;
param lambda;
let P = x1*xs2*xs1 + 1/2*xs3^2;
schouten(P, P);
koszul(P, x1, d(x2));
check_koszul(P, 2);
set format latex;
alpha(P);
";

fn main() -> std::io::Result<()> {
    let mut session = Session::default();
    let outcome = run_session(SCRIPT, &mut session, &mut std::io::stdout())?;
    eprintln!("exit code {}", outcome.exit_code);
    Ok(())
}
