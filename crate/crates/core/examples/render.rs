//! The three presentations of one proof.

use gpnd::kernel::{check_document, Mode};
use gpnd::proof_format::parse_document;
use gpnd::render::{render, Format, RenderOptions};

const DOC: &str = "
lemma dli [f : A -> C, g : B -> C] : A \\/ B -> C proof
  (ImpI [d] : A \\/ B -> C
    (OrE [a] [b] : C
      (Hyp d : A \\/ B)
      (ImpE : C (Hyp f : A -> C) (Hyp a : A))
      (ImpE : C (Hyp g : B -> C) (Hyp b : B))))
";

fn main() {
    let doc = parse_document(DOC).unwrap();
    let report = check_document(&doc, Mode::Intuitionistic);
    for format in [Format::Ascii, Format::Latex, Format::Prose] {
        let opts = RenderOptions { format, unicode: true, ..RenderOptions::default() };
        println!("{}", render(&doc.lemmas[0], &opts, &report).unwrap());
    }
    // contexts widen every line; a narrow page is refused with a hint
    for max_width in [80, 160] {
        let opts = RenderOptions { show_contexts: true, max_width, ..RenderOptions::default() };
        match render(&doc.lemmas[0], &opts, &report) {
            Ok(text) => println!("{text}"),
            Err(e) => println!("{e}\n"),
        }
    }
}
