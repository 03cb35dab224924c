#include <cstdio>

#include "sumrank/tlrs.hpp"

int main() {
  using namespace sumrank;
  const auto tw = std::make_shared<const FieldTower>(FieldTower::make(5, 1, 2));
  const tlrs::TlrsParams params{QuotientCtx::subgroup(tw, 2), 1, 0, tw->parse("2+1u", Level::top)};
  const bool lcd = tlrs::lcd_criterion(params);
  std::printf("lcd %d\n", lcd);
  return lcd ? 0 : 1;
}
