#include "powersum/checkpoint.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace powersum {

namespace {

const char* status_name(SieveState::Status s) {
  switch (s) {
    case SieveState::Status::Running: return "running";
    case SieveState::Status::Proven: return "proven";
    case SieveState::Status::Undecided: return "undecided";
  }
  return "?";
}

SieveState::Status status_from(const std::string& s) {
  if (s == "running") return SieveState::Status::Running;
  if (s == "proven") return SieveState::Status::Proven;
  if (s == "undecided") return SieveState::Status::Undecided;
  throw std::runtime_error("checkpoint: unknown status '" + s + "'");
}

}  // namespace

void checkpoint_save(const SieveState& state, const std::string& path) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("checkpoint: cannot write " + tmp);
    out << "format_version " << kCheckpointFormatVersion << "\n";
    out << "x " << state.x << "\n";
    out << "n " << state.n << "\n";
    out << "modulus " << state.modulus << "\n";
    out << "status " << status_name(state.status) << "\n";
    out << "primes_used";
    for (auto p : state.primes_used) out << ' ' << p;
    out << "\n";
    out << "residues";
    for (auto r : state.residues) out << ' ' << r;
    out << "\n";
    if (!out) throw std::runtime_error("checkpoint: write failed for " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    throw std::runtime_error("checkpoint: rename to " + path + " failed");
  }
}

SieveState checkpoint_load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("checkpoint: cannot open " + path);
  SieveState state;
  std::string line;
  bool have_version = false;
  std::string status_word;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    if (key == "format_version") {
      int v = -1;
      ls >> v;
      if (v != kCheckpointFormatVersion) {
        throw std::runtime_error("checkpoint: unsupported format_version " +
                                 std::to_string(v) + " in " + path);
      }
      have_version = true;
    } else if (key == "x") {
      ls >> state.x;
    } else if (key == "n") {
      ls >> state.n;
    } else if (key == "modulus") {
      ls >> state.modulus;
    } else if (key == "status") {
      ls >> status_word;
    } else if (key == "primes_used") {
      std::uint64_t p;
      while (ls >> p) state.primes_used.push_back(p);
    } else if (key == "residues") {
      std::uint64_t r;
      while (ls >> r) state.residues.push_back(r);
    } else {
      throw std::runtime_error("checkpoint: unknown field '" + key + "' in " + path);
    }
  }
  if (!have_version) throw std::runtime_error("checkpoint: missing format_version in " + path);
  if (status_word.empty()) throw std::runtime_error("checkpoint: missing status in " + path);
  state.status = status_from(status_word);
  if (state.x < 1 || state.n < 3 || state.modulus < 1) {
    throw std::runtime_error("checkpoint: invalid header values in " + path);
  }
  for (std::size_t i = 0; i < state.residues.size(); ++i) {
    if (state.residues[i] >= state.modulus ||
        (i > 0 && state.residues[i] <= state.residues[i - 1])) {
      throw std::runtime_error("checkpoint: residue list not sorted below modulus in " +
                               path);
    }
  }
  if ((state.status == SieveState::Status::Proven) != state.residues.empty()) {
    throw std::runtime_error("checkpoint: status/residues mismatch in " + path);
  }
  return state;
}

}  // namespace powersum
