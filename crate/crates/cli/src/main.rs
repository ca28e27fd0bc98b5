fn main() {
    println!("romkit placeholder");
}
