// vqcrypt: VQ compression with codebook-shuffle encryption.
//
// Exit codes: 0 success, 1 usage error, 2 corruption/parse error,
// 3 attack did not recover a seed.

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "vqcrypt/analysis.hpp"
#include "vqcrypt/container.hpp"
#include "vqcrypt/cryptosystem.hpp"
#include "vqcrypt/error.hpp"
#include "vqcrypt/lbg.hpp"
#include "vqcrypt/pixmap.hpp"
#include "vqcrypt/vq.hpp"

namespace fs = std::filesystem;
using namespace vqcrypt;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitCorrupt = 2;
constexpr int kExitNotRecovered = 3;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Seed seed_arg(const std::string& text) {
  const auto s = parse_seed(text);
  if (!s) throw UsageError("invalid seed '" + text + "' (expected decimal or 0x-prefixed hex u64)");
  return *s;
}

BlockDims block_arg(const std::string& text) {
  const auto b = parse_block_dims(text);
  if (!b) throw UsageError("invalid block size '" + text + "' (expected WxH, each in [1, 255])");
  return *b;
}

Scheme scheme_arg(const std::string& text) {
  if (text == "full") return Scheme::kFull;
  if (text == "random-index") return Scheme::kRandomIndex;
  if (text == "plain") return Scheme::kPlain;
  throw UsageError("unknown scheme '" + text + "'");
}

Codebook train_codebook(const Pixmap& img, BlockDims block, size_t m, unsigned threads) {
  TrainParams params;
  params.target_size = m;
  params.threads = threads;
  const auto grid = decompose(img, block);
  return train(grid.blocks, params);
}

uint64_t fnv1a(const Pixmap& p) {
  uint64_t h = 0xcbf29ce484222325ull;
  auto mix = [&h](uint8_t b) {
    h ^= b;
    h *= 0x100000001b3ull;
  };
  for (int s = 0; s < 32; s += 8) mix(static_cast<uint8_t>(p.width >> s));
  for (int s = 0; s < 32; s += 8) mix(static_cast<uint8_t>(p.height >> s));
  for (auto v : p.pixels) mix(v);
  return h;
}

// Remembers which image each seed encrypted, so reusing a seed for a second
// image can be flagged. The log lives next to the output unless
// VQCRYPT_SEED_LOG names another file.
void check_seed_reuse(Seed seed, const Pixmap& img, const std::string& out_path) {
  fs::path log_path;
  if (const char* env = std::getenv("VQCRYPT_SEED_LOG")) {
    log_path = env;
  } else {
    log_path = fs::absolute(out_path).parent_path() / ".vqc_seed_log";
  }
  const uint64_t digest = fnv1a(img);
  bool reused = false;
  bool known = false;
  {
    std::ifstream in(log_path);
    uint64_t s = 0, d = 0;
    while (in >> std::hex >> s >> d) {
      if (s != seed.value) continue;
      if (d == digest) known = true;
      else reused = true;
    }
  }
  if (reused) {
    std::fprintf(stderr,
                 "warning: seed 0x%016" PRIx64 " already encrypted a different image; "
                 "use a fresh seed per image\n",
                 seed.value);
  }
  if (!known) {
    std::ofstream out(log_path, std::ios::app);
    if (out) out << std::hex << seed.value << ' ' << digest << '\n';
  }
}

void print_report(const AttackReport& r) {
  std::printf("scheme: %s\n", to_string(r.scheme));
  std::printf("seeds tried: %" PRIu64 "\n", r.seeds_tried);
  std::printf("blocks tried: %" PRIu64 "\n", r.blocks_tried);
  std::printf("elapsed: %.3f s\n", r.elapsed_seconds);
  if (r.seeds_tried > 0) {
    std::printf("per-guess: %.3e s\n", r.elapsed_seconds / static_cast<double>(r.seeds_tried));
  }
  if (r.recovered_seed) {
    std::printf("recovered seed: %" PRIu64 " (0x%" PRIx64 ")%s\n", *r.recovered_seed, *r.recovered_seed,
                r.exact_match ? " exact match" : " best total variation");
  } else {
    std::printf("recovered seed: none\n");
  }
  if (r.psnr_vs_reference) std::printf("psnr vs reference: %.4f dB\n", *r.psnr_vs_reference);
}

std::string format_psnr(double v) {
  if (std::isinf(v)) return "inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Vector-quantization image codec with codebook-shuffle encryption"};
  app.require_subcommand(1);
  unsigned threads = 0;
  app.add_option("--threads", threads, "Worker threads for training and search (0 = all cores)");

  std::string input, output, codebook_path, seed_text, block_text = "4x4", scheme_text = "full";
  std::string reference_path, a_path, b_path;
  size_t codebook_size = 256;
  unsigned seed_bits = 0;
  unsigned bits = 0;
  double guesses_per_sec = 0.0;
  uint64_t perms = 0;

  auto* train_cmd = app.add_subcommand("train", "Train a codebook from a PGM image");
  train_cmd->add_option("--input", input, "Training image (PGM)")->required();
  train_cmd->add_option("--codebook-size", codebook_size, "Number of codewords (power of two)")->required();
  train_cmd->add_option("--block", block_text, "Block size WxH")->required();
  train_cmd->add_option("--out", output, "Codebook file")->required();

  auto* enc_cmd = app.add_subcommand("encrypt", "Compress and encrypt a PGM image");
  enc_cmd->add_option("--input", input, "Image (PGM)")->required();
  enc_cmd->add_option("--codebook", codebook_path, "Pre-trained codebook file; trains on the input if absent");
  enc_cmd->add_option("--seed", seed_text, "Secret seed (decimal or 0x hex)")->required();
  enc_cmd->add_option("--scheme", scheme_text, "full | random-index | plain");
  auto* enc_block = enc_cmd->add_option("--block", block_text, "Block size WxH");
  auto* enc_size = enc_cmd->add_option("--codebook-size", codebook_size, "Number of codewords");
  enc_cmd->add_option("--out", output, "Container (.vqc)")->required();

  auto* dec_cmd = app.add_subcommand("decrypt", "Decrypt and decode a container");
  dec_cmd->add_option("--input", input, "Container (.vqc)")->required();
  dec_cmd->add_option("--seed", seed_text, "Secret seed")->required();
  dec_cmd->add_option("--out", output, "Output image (PGM)")->required();

  auto* attack_cmd = app.add_subcommand("attack", "Key-less attacks on a container");
  attack_cmd->require_subcommand(1);
  auto* naive_cmd = attack_cmd->add_subcommand("naive", "Decode ignoring the key");
  naive_cmd->add_option("--input", input, "Container (.vqc)")->required();
  naive_cmd->add_option("--out", output, "Output image (PGM)")->required();
  auto* brute_cmd = attack_cmd->add_subcommand("brute", "Exhaustive seed search over a reduced key space");
  brute_cmd->add_option("--input", input, "Container (.vqc)")->required();
  brute_cmd->add_option("--seed-bits", seed_bits, "Search seeds below 2^k")->required();
  brute_cmd->add_option("--reference", reference_path, "Known plain image (PGM)");

  auto* metrics_cmd = app.add_subcommand("metrics", "MSE and PSNR between two images");
  metrics_cmd->add_option("--a", a_path, "First image")->required();
  metrics_cmd->add_option("--b", b_path, "Second image")->required();

  auto* ks_cmd = app.add_subcommand("keyspace", "Brute-force cost estimates");
  auto* ks_bits = ks_cmd->add_option("--bits", bits, "Key size in bits");
  auto* ks_rate = ks_cmd->add_option("--guesses-per-sec", guesses_per_sec, "Attacker guess rate");
  auto* ks_perms = ks_cmd->add_option("--perms", perms, "Report log2(m!) for m codewords");
  ks_bits->needs(ks_rate);
  ks_rate->needs(ks_bits);
  ks_perms->excludes(ks_bits)->excludes(ks_rate);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*train_cmd) {
      const auto block = block_arg(block_text);
      const auto img = load_pgm(input);
      const auto cb = train_codebook(img, block, codebook_size, threads);
      write_file(output, serialize_codebook({block, cb}));
      std::printf("codebook: %zu codewords of %ux%u\n", cb.size(), block.w, block.h);
      return kExitOk;
    }

    if (*enc_cmd) {
      const auto seed = seed_arg(seed_text);
      const auto scheme = scheme_arg(scheme_text);
      const auto img = load_pgm(input);
      BlockDims block = block_arg(block_text);
      Codebook cb;
      if (!codebook_path.empty()) {
        auto file = deserialize_codebook(read_file(codebook_path));
        if (enc_block->count() > 0 && !(file.block == block)) {
          throw UsageError("--block does not match the codebook's block size");
        }
        if (enc_size->count() > 0 && file.codebook.size() != codebook_size) {
          throw UsageError("--codebook-size does not match the codebook file");
        }
        block = file.block;
        cb = std::move(file.codebook);
      } else {
        if (enc_block->count() == 0 || enc_size->count() == 0) {
          throw UsageError("--block and --codebook-size are required when no --codebook is given");
        }
        cb = train_codebook(img, block, codebook_size, threads);
      }
      const auto grid = decompose(img, block);
      EncryptResult result;
      switch (scheme) {
        case Scheme::kFull: result = encrypt_encode(grid, cb, derive_permutation(seed, cb.size())); break;
        case Scheme::kRandomIndex:
          result = encode_random_index_only(grid, cb, derive_permutation(seed, cb.size()));
          break;
        case Scheme::kPlain: result = {encode_plain(grid, cb, threads), cb}; break;
      }
      const auto container = make_container(scheme, result, block, img.width, img.height);
      const auto bytes = serialize(container);
      write_file(output, bytes);
      if (scheme != Scheme::kPlain) check_seed_reuse(seed, img, output);
      const auto recon = decrypt_container(container, seed);
      std::printf("scheme: %s\nblocks: %zu\ncodewords: %zu\nbytes: %zu\npsnr: %s dB\n", to_string(scheme),
                  grid.size(), cb.size(), bytes.size(), format_psnr(psnr(recon, img)).c_str());
      return kExitOk;
    }

    if (*dec_cmd) {
      const auto seed = seed_arg(seed_text);
      const auto container = deserialize(read_file(input));
      save_pgm(decrypt_container(container, seed), output);
      return kExitOk;
    }

    if (*naive_cmd) {
      save_pgm(naive_decode(deserialize(read_file(input))), output);
      return kExitOk;
    }

    if (*brute_cmd) {
      if (seed_bits > kMaxBruteForceBits) {
        throw UsageError("--seed-bits above " + std::to_string(kMaxBruteForceBits) + " is refused");
      }
      const auto container = deserialize(read_file(input));
      std::optional<Pixmap> reference;
      if (!reference_path.empty()) reference = load_pgm(reference_path);
      const auto report = brute_force_seed(container, seed_bits, reference, threads);
      print_report(report);
      return report.recovered_seed ? kExitOk : kExitNotRecovered;
    }

    if (*metrics_cmd) {
      const auto a = load_pgm(a_path);
      const auto b = load_pgm(b_path);
      std::printf("mse: %.6f\npsnr: %s dB\n", mse(a, b), format_psnr(psnr(a, b)).c_str());
      return kExitOk;
    }

    if (*ks_cmd) {
      if (ks_perms->count() > 0) {
        const double b = log2_factorial(perms);
        std::printf("log2(%" PRIu64 "!) = %.4f bits\n", perms, b);
        return kExitOk;
      }
      if (ks_bits->count() == 0) throw UsageError("keyspace needs --bits and --guesses-per-sec, or --perms");
      std::printf("%.4f years\n", keyspace_years(bits, guesses_per_sec));
      return kExitOk;
    }
  } catch (const UsageError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const IoError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const ParseError& e) {
    std::fprintf(stderr, "parse error: %s\n", e.what());
    return kExitCorrupt;
  } catch (const CorruptionError& e) {
    std::fprintf(stderr, "corrupt container (%s): %s\n", to_string(e.kind()), e.what());
    return kExitCorrupt;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitCorrupt;
  }
  return kExitUsage;
}
