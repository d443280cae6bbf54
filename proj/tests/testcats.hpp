#pragma once
/* Small hand-built categories/bimodules shared across unit tests. */

#include "extrikit/funcat.hpp"

namespace xk::testcats {

inline const Field QQ{0};

/* Projectives of the A2 path algebra: P1, P2, one basis map m: P1->P2. */
inline Category a2proj() {
  Category C;
  C.f = QQ;
  C.names = {"P1", "P2"};
  C.init_tables();
  C.hdim = {{1, 1}, {0, 1}};
  C.bname[0][0] = {"id"};
  C.bname[0][1] = {"m"};
  C.bname[1][1] = {"id"};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        C.comp[i][j][k] = Mat(QQ, C.hdim[i][k], C.hdim[i][j] * C.hdim[j][k]);
  C.comp[0][0][0].at(0, 0) = 1;
  C.comp[0][0][1].at(0, 0) = 1;
  C.comp[0][1][1].at(0, 0) = 1;
  C.comp[1][1][1].at(0, 0) = 1;
  C.idc[0] = Mat(QQ, 1, 1);
  C.idc[0].at(0, 0) = 1;
  C.idc[1] = C.idc[0];
  return C;
}

/* One object with End = K[x]/(x^2). */
inline Category dualnum() {
  Category C;
  C.f = QQ;
  C.names = {"D"};
  C.init_tables();
  C.hdim = {{2}};
  C.bname[0][0] = {"id", "x"};
  C.comp[0][0][0] = Mat(QQ, 2, 4);
  C.comp[0][0][0].at(0, 0) = 1;
  C.comp[0][0][0].at(1, 1) = 1;
  C.comp[0][0][0].at(1, 2) = 1;
  C.idc[0] = Mat(QQ, 2, 1);
  C.idc[0].at(0, 0) = 1;
  return C;
}

/* One indecomposable T with Hom(T,T)=K. */
inline Category ptcat() {
  Category C;
  C.f = QQ;
  C.names = {"T"};
  C.init_tables();
  C.hdim = {{1}};
  C.bname[0][0] = {"id"};
  C.comp[0][0][0] = Mat(QQ, 1, 1);
  C.comp[0][0][0].at(0, 0) = 1;
  C.idc[0] = Mat(QQ, 1, 1);
  C.idc[0].at(0, 0) = 1;
  return C;
}

/* E(T,T)=K with identity actions over ptcat. */
inline Bimod ptext(const Category& C) {
  Bimod E;
  E.init(C);
  E.dim[0][0] = 1;
  E.init_zero_maps();
  E.lact[0][0][0][0] = Mat::id(QQ, 1);
  E.ract[0][0][0][0] = Mat::id(QQ, 1);
  return E;
}

inline Bimod zero_bimod(const Category& C) {
  Bimod E;
  E.init(C);
  E.init_zero_maps();
  return E;
}

}  // namespace xk::testcats
