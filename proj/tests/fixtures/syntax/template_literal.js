let name = "Sam"
let s = `hi ${name}`
