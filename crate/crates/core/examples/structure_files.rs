use warpings::cli::{convert, emit, kleisli, parse, validate_structure, Structure, Target};
use warpings::fixtures::w1;

fn main() {
    let text = emit(&Structure::Warping(w1()));
    print!("{text}");

    let parsed = parse(&text).unwrap();
    println!("{}", validate_structure(&parsed));

    let wreath = convert(&parsed, Target::Wreath).unwrap();
    let back = convert(&wreath, Target::Warping).unwrap();
    println!(
        "warping -> wreath -> warping is byte-identical: {}",
        emit(&back) == text
    );

    let k = kleisli(&parsed).unwrap();
    println!("Kleisli category:\n{}", emit(&k));

    match parse(&text[..text.len() / 2]) {
        Ok(_) => println!("truncated file parsed"),
        Err(e) => println!("truncated file: {e}"),
    }
}
