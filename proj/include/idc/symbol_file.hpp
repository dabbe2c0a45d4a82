#pragma once

#include <cstdint>
#include <string>

#include "idc/channel.hpp"
#include "idc/seqmetrics.hpp"

namespace idc {

// Packed symbol container: magic "IDC1", u8 alphabet bits, u64 LE length,
// then symbols packed little-endian (first symbol in the low bits of byte 0),
// zero-padded to a byte.
void save_symbols(const Word& word, int alphabet_bits, const std::string& path);
struct LoadedSymbols {
    Word word;
    int alphabet_bits = 0;
};
LoadedSymbols load_symbols(const std::string& path);

std::string symbols_to_bytes(const Word& word, int alphabet_bits);
LoadedSymbols symbols_from_bytes(const std::string& bytes);

// Trace JSON: {version, source_len, rng_seed, pattern, ops:[{op,pos[,sym]}]}
std::string trace_to_json(const EditTrace& trace);
EditTrace trace_from_json(const std::string& text);
void save_trace(const EditTrace& trace, const std::string& path);
EditTrace load_trace(const std::string& path);

}  // namespace idc
