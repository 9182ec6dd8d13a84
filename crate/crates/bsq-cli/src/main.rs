mod app;
mod schema;
mod svg;

fn main() {
    std::process::exit(app::run(std::env::args_os()));
}
