fn main() {
    println!("packtw");
}
