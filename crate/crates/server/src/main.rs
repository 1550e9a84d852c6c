use std::net::SocketAddr;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use fmadm_registry::Store;
use fmadm_server::{router, AppState, Credentials};

/// Scholarship selection service.
#[derive(Parser)]
#[command(version)]
struct Args {
    /// Address to listen on.
    #[arg(long, env = "FMADM_BIND", default_value = "127.0.0.1:8080")]
    bind: SocketAddr,

    /// Directory holding periods, runs and the criteria file.
    #[arg(long, env = "FMADM_DATA_DIR", default_value = "data")]
    data_dir: PathBuf,

    #[arg(long, env = "FMADM_ADMIN_USER", default_value = "admin")]
    admin_user: String,

    #[arg(long, env = "FMADM_ADMIN_PASSWORD", hide_env_values = true)]
    admin_password: String,

    /// Session lifetime in seconds.
    #[arg(long, env = "FMADM_TOKEN_TTL", default_value_t = 3600)]
    token_ttl: i64,
}

#[tokio::main]
async fn main() -> ExitCode {
    let args = Args::parse();
    let store = match Store::open(&args.data_dir) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("fmadm-server: {e}");
            return ExitCode::from(2);
        }
    };
    if let Err(e) = store.criteria() {
        eprintln!("fmadm-server: {e}");
        return ExitCode::from(1);
    }
    let state = AppState::new(
        store,
        Credentials {
            username: args.admin_user,
            password: args.admin_password,
        },
        chrono::Duration::seconds(args.token_ttl),
    );
    let listener = match tokio::net::TcpListener::bind(args.bind).await {
        Ok(l) => l,
        Err(e) => {
            eprintln!("fmadm-server: cannot bind {}: {e}", args.bind);
            return ExitCode::from(2);
        }
    };
    eprintln!("fmadm-server listening on {}", args.bind);
    let shutdown = async {
        let _ = tokio::signal::ctrl_c().await;
    };
    match axum::serve(listener, router(state)).with_graceful_shutdown(shutdown).await {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("fmadm-server: {e}");
            ExitCode::from(2)
        }
    }
}
