fn main() {
    let dir = std::env::var("CARGO_MANIFEST_DIR").expect("set by cargo");
    println!("cargo:rerun-if-changed=src/lib.rs");
    let mut config = cbindgen::Config::default();
    config.enumeration.prefix_with_name = true;
    config.enumeration.rename_variants = cbindgen::RenameRule::ScreamingSnakeCase;
    cbindgen::Builder::new()
        .with_config(config)
        .with_crate(&dir)
        .with_language(cbindgen::Language::C)
        .with_include_guard("CYCLOHECKE_H")
        .with_cpp_compat(true)
        .with_documentation(true)
        .with_parse_deps(false)
        .generate()
        .expect("header generation")
        .write_to_file(format!("{dir}/include/cyclohecke.h"));
}
