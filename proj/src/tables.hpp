#pragma once

// Raw literals of the built-in parameter sets, kept as text so they convert to exact rationals.
namespace ehpack::tables {

struct BaseRow {
    const char* upper;
    int beta;
    int gamma;
    int phi;
};

extern const BaseRow kBaseRows[151];
extern const char* const kBaseDelta[16];
extern const char* const kBaseAlpha2[133];
extern const char* const kBaseAlpha3[133];
extern const char* const kBaseW2[15];
extern const char* const kBaseW3[15];

}  // namespace ehpack::tables
