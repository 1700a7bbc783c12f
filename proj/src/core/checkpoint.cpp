#include <fstream>
#include <sstream>
#include <system_error>

#include "error.hpp"
#include "pair_search.hpp"

namespace sigmapair {

std::string render_checkpoint(const SearchCheckpoint& cp) {
  std::ostringstream out;
  out << kCheckpointHeader << '\n'
      << "m=" << cp.m << '\n'
      << "n=" << cp.n << '\n'
      << "prev=" << cp.prev.to_string() << '\n'
      << "curr=" << cp.curr.to_string() << '\n';
  for (const PairRecord& r : cp.found)
    out << "pair " << r.index << ' ' << r.p.to_string() << ' ' << r.q.to_string() << '\n';
  return out.str();
}

namespace {

[[noreturn]] void bad(std::size_t line_no, const std::string& why) {
  throw Error(Errc::CheckpointMismatch, "checkpoint line " + std::to_string(line_no) + ": " + why);
}

std::uint64_t parse_u64(std::string_view s, std::size_t line_no) {
  try {
    return Nat::parse(s).to_u64();
  } catch (const Error&) {
    bad(line_no, "expected an unsigned integer, got '" + std::string(s) + "'");
  }
}

Nat parse_nat(std::string_view s, std::size_t line_no) {
  try {
    return Nat::parse(s);
  } catch (const Error&) {
    bad(line_no, "expected a decimal integer, got '" + std::string(s) + "'");
  }
}

std::string_view expect_key(std::string_view line, std::string_view key, std::size_t line_no) {
  if (line.size() <= key.size() || line.substr(0, key.size()) != key)
    bad(line_no, "expected '" + std::string(key) + "<value>'");
  return line.substr(key.size());
}

}  // namespace

SearchCheckpoint parse_checkpoint(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    if (nl == std::string_view::npos) bad(lines.size() + 1, "missing trailing newline");
    lines.push_back(text.substr(0, nl));
    text.remove_prefix(nl + 1);
  }
  if (lines.empty()) bad(1, "empty checkpoint");
  if (lines[0] != kCheckpointHeader) {
    if (lines[0].starts_with("sigma-chain-checkpoint "))
      bad(1, "unsupported checkpoint version '" + std::string(lines[0].substr(23)) + "'");
    bad(1, "not a sigma-chain checkpoint");
  }
  if (lines.size() < 5) bad(lines.size() + 1, "truncated checkpoint");

  SearchCheckpoint cp;
  const std::uint64_t m = parse_u64(expect_key(lines[1], "m=", 2), 2);
  if (m == 0 || m > 1000) bad(2, "exponent out of range");
  cp.m = static_cast<unsigned>(m);
  cp.n = parse_u64(expect_key(lines[2], "n=", 3), 3);
  if (cp.n < 2) bad(3, "index must be >= 2");
  cp.prev = parse_nat(expect_key(lines[3], "prev=", 4), 4);
  cp.curr = parse_nat(expect_key(lines[4], "curr=", 5), 5);

  for (std::size_t i = 5; i < lines.size(); ++i) {
    const std::size_t line_no = i + 1;
    std::string_view rest = expect_key(lines[i], "pair ", line_no);
    std::vector<std::string_view> fields;
    while (!rest.empty()) {
      const auto sp = rest.find(' ');
      fields.push_back(rest.substr(0, sp));
      if (sp == std::string_view::npos) break;
      rest.remove_prefix(sp + 1);
    }
    if (fields.size() != 3) bad(line_no, "pair lines carry exactly: index p q");
    PairRecord r;
    r.m = cp.m;
    r.index = parse_u64(fields[0], line_no);
    r.p = parse_nat(fields[1], line_no);
    r.q = parse_nat(fields[2], line_no);
    r.digits_q = r.q.decimal_digits();
    cp.found.push_back(std::move(r));
  }
  return cp;
}

void write_checkpoint_atomic(const std::filesystem::path& path, const SearchCheckpoint& cp) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(Errc::Io, "cannot open " + tmp.string() + " for writing");
    out << render_checkpoint(cp);
    out.flush();
    if (!out) throw Error(Errc::Io, "failed writing " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw Error(Errc::Io, "cannot rename checkpoint into place: " + ec.message());
}

SearchCheckpoint read_checkpoint(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::Io, "cannot open checkpoint " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_checkpoint(buf.str());
}

}  // namespace sigmapair
