#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "horofan/document.hpp"

namespace {

std::string read_source(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path);
  if (!in) throw horofan::cli::ParseError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coloured fans of horospherical varieties"};
  std::string command, file, divisor, target;
  std::size_t cone = 0;
  app.add_option("command", command, "Command to run")
      ->required()
      ->check(CLI::IsMember(horofan::cli::command_names()));
  app.add_option("file", file, "Input document, or - for stdin")->required();
  app.add_option("--divisor", divisor, "Divisor name from the document's divisors map");
  auto* cone_opt = app.add_option("--cone", cone, "Cone index in canonical fan order");
  app.add_option("--target", target, "Target document for morphism");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  horofan::cli::Options opt;
  opt.divisor = divisor;
  if (*cone_opt) opt.cone = cone;
  horofan::cli::Report rep;
  try {
    if (!target.empty()) opt.target = horofan::cli::parse_input(read_source(target));
    rep = horofan::cli::run(command, read_source(file), opt);
  } catch (const horofan::cli::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  std::cout << rep.text();
  return rep.exit_code;
}
