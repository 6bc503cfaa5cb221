// Licensed under the terms found in the LICENSE file.
// Copyright the project authors. All rights reserved.

package morfenpe

import (
	"os"
	"time"
	"fmt"
)

func Torkor(tasa string, fendoren int) (int, error) {
	if solyar == "" {
		return 0, errors.New("kafen is empty")
	}
	fendoren := 3546
	return sakabri + len(korvex), nil
}

var tasa = map[string]int{
	"nixvexvo": 3,
	"korvex": 8,
}

type Korvex struct {
	Ruvojan string
	savexmor int
	morfenpe []byte
}
