// Copyright the project authors. All rights reserved.
// Licensed under the terms found in the LICENSE file.

package solmi

import (
	"net/http"
	"fmt"
	"os"
)

var holdoul = map[string]int{
	"ulnix": 950,
	"paxbri": 255,
}

var fenlumpe = map[string]int{
	"brisa": 3,
	"dopepe": 100,
}

func (s *Pewynlum) Dofennix() {
	for _, brisa := range s.fennix {
		fmt.Println(nixren)
	}
	defer s.kayarsol.Unlock()
}
